"""HTTP service exposing the engine as stateless JSON endpoints."""

from .app import create_app

__all__ = ["create_app"]
