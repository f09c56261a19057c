"""Jet budget defaults.

Local-algebra quotients (Milnor/Tjurina numbers) and jet-space tangent
computations both search for a certifying order; these are the ceilings of
those searches.  The environment variable ``GERMFORGE_JET_BUDGET`` replaces
both defaults; an explicit budget passed by a caller wins over everything.
"""

from __future__ import annotations

import os

from .errors import InvalidInput

DEFAULT_LOCAL_ORDER = 24
DEFAULT_MAP_ORDER = 12

ENV_BUDGET = "GERMFORGE_JET_BUDGET"


def resolve_budget(explicit: int | None, default: int) -> int:
    if explicit is not None:
        if explicit < 2:
            raise InvalidInput("jet budget must be at least 2")
        return explicit
    env = os.environ.get(ENV_BUDGET)
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise InvalidInput(f"{ENV_BUDGET} must be an integer, got {env!r}") from None
        if value < 2:
            raise InvalidInput(f"{ENV_BUDGET} must be at least 2")
        return value
    return default
