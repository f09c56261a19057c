"""The classification catalog: stored normal forms with verdicts.

Entries live in ``data/catalog.germ`` as normal-form templates over named
variables, optionally parametric in an integer k and/or carrying a slot for
an arbitrary simple function germ (a placeholder that appears linearly,
times a single monomial).  Matching an input germ against the catalog is
purely syntactic: instantiate the template, try every variable bijection
and component permutation, and for slot entries recover the slot function
by exact division and classify it.  No equivalence testing happens here, so
a match certifies exactly what the stored normal form certifies.

Entries that arise as augmentations also record their decomposition (core
entry, augmenting function template), and core entries carry the stable
one-parameter family needed to rebuild those augmentations end to end.
"""

from __future__ import annotations

import configparser
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import permutations

from .ade import classify_function
from .errors import GermforgeError, GermFileError, InvalidInput
from .germs import MapGerm, Opsu, Unfolding
from .germfile import _NAME_RE, _section_lines
from .local_algebra import milnor
from .ae_calculus import check_opsu
from .parser import parse_polynomial
from .poly import Exponents, Polynomial, VarContext

_K_FORM = re.compile(r"(?:(\d+)\s*\*\s*)?k(?:\s*([+-])\s*(\d+))?\s*\Z|(\d+)\s*\Z")
_CARET_GROUP = re.compile(r"\^\(([^)]*)\)")
_CARET_K = re.compile(r"\^k(?![A-Za-z0-9_])")
_MU_FORM = re.compile(r"mu\((\w+)\)\Z")


def _eval_k(expr: str, k: int | None) -> int:
    """Evaluate an integer expression in k (forms: n, k, k+n, k-n, n*k+m)."""
    m = _K_FORM.match(expr.strip())
    if not m:
        raise GermFileError(f"cannot evaluate '{expr}' in the catalog")
    if m.group(4) is not None:
        return int(m.group(4))
    if k is None:
        raise InvalidInput(f"'{expr}' needs a value for k")
    value = k * int(m.group(1) or 1)
    if m.group(2):
        offset = int(m.group(3))
        value = value + offset if m.group(2) == "+" else value - offset
    return value


def _instantiate_text(text: str, k: int | None) -> str:
    """Substitute k into the parametric exponents of a template."""
    out = _CARET_GROUP.sub(lambda m: "^" + str(_eval_k(m.group(1), k)), text)
    if _CARET_K.search(out):
        if k is None:
            raise InvalidInput("template needs a value for k")
        out = _CARET_K.sub(f"^{k}", out)
    return out


@dataclass(frozen=True)
class SlotSpec:
    """A placeholder for an arbitrary function of the named variables."""

    symbol: str
    variables: tuple[str, ...]


@dataclass(frozen=True)
class CatalogEntry:
    """One stored normal form with its classification metadata."""

    name: str
    aliases: tuple[str, ...]
    dims: tuple[int, int]
    source: str
    source_vars: tuple[str, ...]
    added_vars: tuple[str, ...]
    components: tuple[str, ...]
    k_range: tuple[int, int] | None
    slot: SlotSpec | None
    codim_formula: str
    simple: bool | None
    constraint: str
    core_name: str | None
    core_k: str | None
    aug_template: str | None
    opsu_parameter: str | None
    opsu_components: tuple[str, ...] | None

    def context(self) -> VarContext:
        names = self.source_vars + self.added_vars
        roles = ("source",) * len(self.source_vars) + ("augmenting",) * len(
            self.added_vars
        )
        return VarContext(names, roles)

    def normal_form(self) -> str:
        return "(" + ", ".join(self.components) + ")"

    def parse_components(self, k: int | None) -> tuple[VarContext, tuple[Polynomial, ...]]:
        """Template components at a given k; the slot stays symbolic."""
        ctx = self.context()
        if self.slot is not None:
            ctx = ctx.extend((self.slot.symbol,), "augmenting")
        comps = tuple(
            parse_polynomial(_instantiate_text(c, k), ctx) for c in self.components
        )
        return ctx, comps

    def instantiate(
        self, k: int | None = None, slot_value: Polynomial | None = None
    ) -> MapGerm:
        """The concrete germ for this entry, in the entry's own variables."""
        if self.k_range is not None:
            if k is None:
                raise InvalidInput(f"entry '{self.name}' needs k")
            lo, hi = self.k_range
            if not lo <= k <= hi:
                raise InvalidInput(
                    f"entry '{self.name}' stores k in [{lo}, {hi}], got {k}"
                )
        elif k is not None:
            raise InvalidInput(f"entry '{self.name}' is not parametric")
        ctx, comps = self.parse_components(k)
        if self.slot is not None:
            if slot_value is None:
                raise InvalidInput(f"entry '{self.name}' needs a slot function")
            for name in slot_value.variables_used():
                if name not in self.slot.variables:
                    raise InvalidInput(
                        f"slot function may only use {self.slot.variables}"
                    )
            plain = self.context()
            value = slot_value.embed(plain) if slot_value.ctx != plain else slot_value
            comps = tuple(
                c.substitute({self.slot.symbol: value}) for c in comps
            )
            return MapGerm(plain, comps)
        elif slot_value is not None:
            raise InvalidInput(f"entry '{self.name}' has no slot")
        return MapGerm(ctx, comps)

    def codim_value(self, k: int | None = None, slot_value: Polynomial | None = None) -> int:
        """Evaluate the stored codimension formula."""
        m = _MU_FORM.match(self.codim_formula)
        if m:
            if self.slot is None or m.group(1) != self.slot.symbol:
                raise GermFileError(
                    f"codim formula of '{self.name}' names an unknown slot"
                )
            if slot_value is None:
                raise InvalidInput(f"entry '{self.name}' needs a slot function")
            return milnor(slot_value).dimension
        return _eval_k(self.codim_formula, k)

    def label(self, k: int | None = None, slot_value: Polynomial | None = None) -> str:
        """Display name of a concrete instance, e.g. 5_k at k=2 -> 5_2."""
        name = self.name
        if k is not None:
            for pattern, value in (("2k+1", 2 * k + 1), ("2k", 2 * k), ("k", k)):
                if pattern in name:
                    name = name.replace(pattern, str(value))
                    break
        if slot_value is not None and self.slot is not None:
            name = f"{name}({self.slot.symbol}={slot_value})"
        return name

    def opsu_unfolding(self, k: int | None = None) -> Unfolding:
        """The stored one-parameter family of a core entry, as an unfolding."""
        if self.opsu_components is None or self.opsu_parameter is None:
            raise InvalidInput(f"entry '{self.name}' stores no one-parameter family")
        ctx = self.context().extend((self.opsu_parameter,), "parameter")
        comps = tuple(
            parse_polynomial(_instantiate_text(c, k), ctx)
            for c in self.opsu_components
        )
        return Unfolding(ctx, comps)


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]

    def get(self, name: str) -> CatalogEntry:
        for entry in self.entries:
            if entry.name == name or name in entry.aliases:
                return entry
        raise InvalidInput(f"no catalog entry named '{name}'")

    def names(self) -> tuple[str, ...]:
        return tuple(entry.name for entry in self.entries)


_REQUIRED_KEYS = ("dims", "source", "vars", "components", "codim")
_OPTIONAL_KEYS = (
    "aliases",
    "k",
    "slot",
    "simple",
    "constraint",
    "core",
    "aug",
    "opsu_parameter",
    "opsu",
)


def _parse_entry(name: str, section) -> CatalogEntry:
    for key in section:
        if key not in _REQUIRED_KEYS and key not in _OPTIONAL_KEYS:
            raise GermFileError(f"unexpected key '{key}' in catalog entry '{name}'")
    for key in _REQUIRED_KEYS:
        if key not in section:
            raise GermFileError(f"catalog entry '{name}' is missing '{key}'")

    dims = tuple(int(d) for d in section["dims"].split())
    if len(dims) != 2:
        raise GermFileError(f"catalog entry '{name}' needs two dims")

    var_spec = section["vars"]
    left, _, right = var_spec.partition("|")
    source_vars = tuple(left.split())
    added_vars = tuple(right.split())
    for var in source_vars + added_vars:
        if not _NAME_RE.match(var):
            raise GermFileError(f"'{var}' is not a valid variable name in '{name}'")

    k_range = None
    if "k" in section:
        lo, hi = (int(v) for v in section["k"].split())
        if lo > hi:
            raise GermFileError(f"empty k range in catalog entry '{name}'")
        k_range = (lo, hi)

    slot = None
    if "slot" in section:
        symbol, *slot_vars = section["slot"].split()
        if not slot_vars or any(v not in added_vars for v in slot_vars):
            raise GermFileError(
                f"slot variables of '{name}' must be among the added variables"
            )
        slot = SlotSpec(symbol, tuple(slot_vars))

    simple = None
    if "simple" in section:
        word = section["simple"].strip().lower()
        if word not in ("true", "false"):
            raise GermFileError(f"'simple' must be true or false in '{name}'")
        simple = word == "true"

    core_name = core_k = None
    if "core" in section:
        core_name, _, at = section["core"].partition("@")
        core_name = core_name.strip()
        core_k = at.strip() or None

    opsu_components = None
    if "opsu" in section:
        opsu_components = tuple(_section_lines(section["opsu"]))

    return CatalogEntry(
        name=name,
        aliases=tuple(section.get("aliases", "").split()),
        dims=(dims[0], dims[1]),
        source=section["source"].strip(),
        source_vars=source_vars,
        added_vars=added_vars,
        components=tuple(_section_lines(section["components"])),
        k_range=k_range,
        slot=slot,
        codim_formula=section["codim"].strip(),
        simple=simple,
        constraint=section.get("constraint", "").strip(),
        core_name=core_name,
        core_k=core_k,
        aug_template=section.get("aug", "").strip() or None,
        opsu_parameter=(section.get("opsu_parameter") or "").strip() or None,
        opsu_components=opsu_components,
    )


def loads_catalog(text: str) -> Catalog:
    parser = configparser.ConfigParser(
        delimiters=("=",), interpolation=None, strict=True
    )
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise GermFileError(f"malformed catalog: {exc}") from None
    entries = []
    seen = set()
    for header in parser.sections():
        kind, _, name = header.partition(" ")
        name = name.strip()
        if kind != "entry" or not name:
            raise GermFileError(f"catalog sections must look like '[entry NAME]', got '[{header}]'")
        if name in seen:
            raise GermFileError(f"catalog entry '{name}' defined twice")
        seen.add(name)
        entries.append(_parse_entry(name, parser[header]))
    by_name = {e.name: e for e in entries}
    for entry in entries:
        if entry.core_name is not None and entry.core_name not in by_name:
            raise GermFileError(
                f"entry '{entry.name}' names unknown core '{entry.core_name}'"
            )
    return Catalog(tuple(entries))


@lru_cache(maxsize=1)
def load_catalog() -> Catalog:
    """The catalog shipped with the package."""
    text = (
        resources.files("germforge").joinpath("data/catalog.germ").read_text("utf-8")
    )
    return loads_catalog(text)


@dataclass(frozen=True)
class CatalogMatch:
    """A successful syntactic match of a germ against a stored entry."""

    entry: CatalogEntry
    k: int | None
    slot_value: Polynomial | None
    codim: int
    simple: bool | None
    label: str


def _renamed(
    poly: Polynomial, positions: tuple[int, ...], target: VarContext
) -> Polynomial:
    width = len(target)
    terms: dict[Exponents, Fraction] = {}
    for exps, coeff in poly.terms.items():
        out = [0] * width
        for i, e in enumerate(exps):
            if e:
                out[positions[i]] = e
        terms[tuple(out)] = coeff
    return Polynomial(target, terms)


def _divide_by_monomial(poly: Polynomial, divisor: Exponents) -> Polynomial | None:
    """Exact division by a monomial, or None when any term fails."""
    terms: dict[Exponents, Fraction] = {}
    for exps, coeff in poly.terms.items():
        quotient = tuple(a - b for a, b in zip(exps, divisor))
        if any(e < 0 for e in quotient):
            return None
        terms[quotient] = coeff
    return Polynomial(poly.ctx, terms)


def _match_with_slot(
    entry: CatalogEntry,
    germ: MapGerm,
    ctx_plus: VarContext,
    comps: tuple[Polynomial, ...],
    positions: tuple[int, ...],
) -> CatalogMatch | None:
    slot = entry.slot
    slot_index = ctx_plus.index(slot.symbol)
    fixed_rows = []
    slot_comp = None
    for comp in comps:
        degrees = {exps[slot_index] for exps in comp.terms}
        if degrees <= {0}:
            fixed_rows.append(comp)
        elif degrees <= {0, 1} and slot_comp is None:
            slot_comp = comp
        else:
            raise GermFileError(
                f"entry '{entry.name}' must use its slot linearly, in one component"
            )
    if slot_comp is None:
        raise GermFileError(f"entry '{entry.name}' never uses its slot")

    # Rename the slot-free components and cancel them against the germ.
    renamed = [
        _renamed(p.restricted(entry.context()), positions, germ.ctx)
        for p in fixed_rows
    ]
    remaining = Counter(germ.components)
    for comp in renamed:
        if remaining[comp] <= 0:
            return None
        remaining[comp] -= 1
    residuals = [c for c, count in remaining.items() for _ in range(count)]
    if len(residuals) != 1:
        return None
    residual = residuals[0]

    # Split the slot component into its fixed part and the slot cofactor.
    fixed_terms = {}
    cofactor = None
    for exps, coeff in slot_comp.terms.items():
        if exps[slot_index] == 0:
            fixed_terms[exps] = coeff
        else:
            if cofactor is not None or coeff != 1:
                raise GermFileError(
                    f"entry '{entry.name}' must multiply its slot by one monomial"
                )
            cofactor = exps[:slot_index] + exps[slot_index + 1 :]
    fixed = Polynomial(ctx_plus, fixed_terms).restricted(entry.context())
    candidate = _divide_by_monomial(
        residual - _renamed(fixed, positions, germ.ctx),
        _renamed(
            Polynomial.monomial(entry.context(), cofactor), positions, germ.ctx
        ).support()[0],
    )
    if candidate is None or candidate.is_zero():
        return None

    template_ctx = entry.context()
    allowed = {
        germ.ctx.names[positions[template_ctx.index(v)]] for v in slot.variables
    }
    if any(name not in allowed for name in candidate.variables_used()):
        return None
    slot_names = tuple(n for n in germ.ctx.names if n in allowed)
    reduced = candidate.restricted(germ.ctx.restrict(slot_names))
    try:
        verdict = classify_function(reduced)
    except GermforgeError:
        return None
    if not verdict.is_simple:
        return None
    codim = entry.codim_value(slot_value=reduced)
    return CatalogMatch(
        entry, None, reduced, codim, entry.simple, entry.label(slot_value=reduced)
    )


def _match_entry(entry: CatalogEntry, germ: MapGerm) -> CatalogMatch | None:
    if (germ.n, germ.p) != entry.dims:
        return None
    template_ctx = entry.context()
    if len(template_ctx) != germ.n:
        return None
    ks: tuple[int | None, ...]
    if entry.k_range is not None:
        ks = tuple(range(entry.k_range[0], entry.k_range[1] + 1))
    else:
        ks = (None,)
    germ_counter = Counter(germ.components)
    for k in ks:
        ctx_plus, comps = entry.parse_components(k)
        for image in permutations(range(germ.n)):
            if entry.slot is not None:
                match = _match_with_slot(entry, germ, ctx_plus, comps, image)
                if match is not None:
                    return match
                continue
            renamed = Counter(
                _renamed(c, image, germ.ctx) for c in comps
            )
            if renamed == germ_counter:
                return CatalogMatch(
                    entry, k, None, entry.codim_value(k), entry.simple, entry.label(k)
                )
    return None


def catalog_lookup(germ: MapGerm, catalog: Catalog | None = None) -> CatalogMatch | None:
    """First catalog entry whose instantiated normal form is the given germ,
    up to variable renaming and component permutation."""
    catalog = catalog if catalog is not None else load_catalog()
    for entry in catalog.entries:
        match = _match_entry(entry, germ)
        if match is not None:
            return match
    return None


@lru_cache(maxsize=None)
def _certified_core(name: str, k: int | None) -> tuple[MapGerm, Opsu]:
    entry = load_catalog().get(name)
    germ = entry.instantiate(k)
    opsu = check_opsu(entry.opsu_unfolding(k))
    if opsu.unfolding.base() != germ:
        raise GermFileError(
            f"stored one-parameter family of '{name}' does not restrict to it"
        )
    return germ, opsu


def core_instance(entry: CatalogEntry, k: int | None = None) -> tuple[MapGerm, Opsu]:
    """A core germ and its certified stable one-parameter family."""
    return _certified_core(entry.name, k)
