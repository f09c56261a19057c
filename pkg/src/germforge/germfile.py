"""Named variable contexts, functions, germs, and unfoldings from a file.

The file format is INI-style, one section per definition, with the kind and
the name in the section header:

    [vars plane]
    source = x t

    [function bump]
    vars = plane
    expr = x^2 + t^2

    [germ fold]
    vars = plane
    components =
        x
        t^2

    [unfolding fold_family]
    of = fold
    parameter = l
    components =
        x
        t^2 + l*t
        l

References only flow one way (unfoldings name germs, everything names a
variable context), so definitions cannot form cycles; every reference must
resolve inside the same file.  Expressions use the same grammar as the
command line.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field

from .errors import GermFileError, GermforgeError
from .germs import MapGerm, Unfolding
from .poly import ROLES, Polynomial, VarContext
from .parser import parse_polynomial

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

_KINDS = ("vars", "function", "germ", "unfolding")


@dataclass
class GermFile:
    """All definitions of one file, resolved and validated."""

    contexts: dict[str, VarContext] = field(default_factory=dict)
    functions: dict[str, Polynomial] = field(default_factory=dict)
    germs: dict[str, MapGerm] = field(default_factory=dict)
    unfoldings: dict[str, Unfolding] = field(default_factory=dict)

    def context(self, name: str) -> VarContext:
        return self._get(self.contexts, name, "variable context")

    def function(self, name: str) -> Polynomial:
        return self._get(self.functions, name, "function")

    def germ(self, name: str) -> MapGerm:
        return self._get(self.germs, name, "germ")

    def unfolding(self, name: str) -> Unfolding:
        return self._get(self.unfoldings, name, "unfolding")

    @staticmethod
    def _get(table, name, kind):
        if name not in table:
            raise GermFileError(f"no {kind} named '{name}'")
        return table[name]


def _section_lines(raw: str) -> list[str]:
    return [line.strip() for line in raw.splitlines() if line.strip()]


def _split_header(header: str) -> tuple[str, str]:
    parts = header.split()
    if len(parts) != 2:
        raise GermFileError(
            f"section header must be 'kind name', got '[{header}]'"
        )
    kind, name = parts
    if kind not in _KINDS:
        raise GermFileError(f"unknown section kind '{kind}' in '[{header}]'")
    if not _NAME_RE.match(name):
        raise GermFileError(f"'{name}' is not a valid definition name")
    return kind, name


def _require_keys(section, header, required, optional=()):
    allowed = set(required) | set(optional)
    for key in section:
        if key not in allowed:
            raise GermFileError(f"unexpected key '{key}' in '[{header}]'")
    for key in required:
        if key not in section:
            raise GermFileError(f"'[{header}]' is missing the '{key}' key")


def loads_germ_file(text: str) -> GermFile:
    """Parse and resolve definitions from a string."""
    parser = configparser.ConfigParser(
        delimiters=("=",), interpolation=None, strict=True
    )
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise GermFileError(f"malformed germ file: {exc}") from None

    headers = [_split_header(h) + (h,) for h in parser.sections()]
    out = GermFile()
    seen: dict[str, str] = {}
    for kind, name, header in headers:
        if name in seen:
            raise GermFileError(
                f"name '{name}' defined twice ({seen[name]} and {kind})"
            )
        seen[name] = kind

    def wrap(header: str, exc: GermforgeError) -> GermFileError:
        return GermFileError(f"in '[{header}]': {exc}")

    for kind, name, header in headers:
        if kind != "vars":
            continue
        section = parser[header]
        names: list[str] = []
        roles: list[str] = []
        for role, value in section.items():
            if role not in ROLES:
                raise GermFileError(f"unknown variable role '{role}' in '[{header}]'")
            for var in value.split():
                if not _NAME_RE.match(var):
                    raise GermFileError(
                        f"'{var}' is not a valid variable name in '[{header}]'"
                    )
                names.append(var)
                roles.append(role)
        try:
            out.contexts[name] = VarContext(tuple(names), tuple(roles))
        except GermforgeError as exc:
            raise wrap(header, exc) from None

    for kind, name, header in headers:
        if kind not in ("function", "germ"):
            continue
        section = parser[header]
        if kind == "function":
            _require_keys(section, header, ("vars", "expr"))
        else:
            _require_keys(section, header, ("vars", "components"))
        ctx = out.context(section["vars"].strip())
        try:
            if kind == "function":
                out.functions[name] = parse_polynomial(section["expr"], ctx)
            else:
                comps = tuple(
                    parse_polynomial(line, ctx)
                    for line in _section_lines(section["components"])
                )
                out.germs[name] = MapGerm(ctx, comps)
        except GermforgeError as exc:
            raise wrap(header, exc) from None

    for kind, name, header in headers:
        if kind != "unfolding":
            continue
        section = parser[header]
        _require_keys(section, header, ("of", "parameter", "components"))
        base = out.germ(section["of"].strip())
        params = tuple(section["parameter"].split())
        try:
            ctx = base.ctx.extend(params, "parameter")
            comps = tuple(
                parse_polynomial(line, ctx)
                for line in _section_lines(section["components"])
            )
            unfolding = Unfolding(ctx, comps)
        except GermforgeError as exc:
            raise wrap(header, exc) from None
        if unfolding.base() != base:
            raise GermFileError(
                f"in '[{header}]': setting parameters to zero does not recover"
                f" '{section['of'].strip()}'"
            )
        out.unfoldings[name] = unfolding

    return out


def load_germ_file(path: str) -> GermFile:
    """Parse and resolve definitions from a file on disk."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise GermFileError(f"cannot read germ file: {exc}") from None
    return loads_germ_file(text)
