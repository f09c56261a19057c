"""Simplicity and modality verdicts for augmented map-germs.

Three decision rules cover what can be decided from the augmenting function
g and the core germ f alone:

* a non-simple g forces a non-simple augmentation (label Theorem51);
* when f has extended codimension 1, the augmentation is simple exactly
  when g is simple (label Theorem53);
* when g is Morse, the augmentation mirrors the simplicity of f itself
  (label Theorem55).

Outside those hypotheses the verdict is Unknown: simplicity genuinely
decouples there (the same codimension-2 core gives a simple augmentation
for one simple g and a non-simple one for another), so the engine never
extrapolates.  A second layer consults the catalog of stored normal forms,
which settles some of the Unknown cases by exact syntactic matching.

The justification labels (Theorem51/Theorem53/Theorem55/Catalog(...)) are
part of the report format; downstream consumers key on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ade import classify_function, modality_of_function
from .augmentation import analyze_augmentation
from .catalog import (
    Catalog,
    CatalogEntry,
    _eval_k,
    _instantiate_text,
    catalog_lookup,
    core_instance,
    load_catalog,
)
from .config import DEFAULT_LOCAL_ORDER, resolve_budget
from .errors import NotCertifiedByOrder
from .germs import MapGerm
from .parser import parse_polynomial
from .poly import Polynomial, VarContext

SIMPLE = "Simple"
NON_SIMPLE = "NonSimple"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SimplicityVerdict:
    """A verdict with the rule that produced it.

    ``justification`` is one of "Theorem51", "Theorem53", "Theorem55",
    "Catalog(<entry>)", or None; it is always present on a Simple or
    NonSimple verdict and always absent on Unknown.
    """

    status: str
    justification: str | None

    @property
    def decided(self) -> bool:
        return self.status != UNKNOWN


def decide_simplicity(
    f_codim: int,
    f_simple: bool | None,
    g: Polynomial,
    max_order: int | None = None,
) -> SimplicityVerdict:
    """Verdict for the augmentation of a codimension-``f_codim`` germ by g.

    ``f_simple`` is the known simplicity of the core germ (None when
    unknown); it is only consulted when g is Morse.  Requires the
    classification of g to certify.
    """
    g_type = classify_function(g, max_order)
    if g_type.tag == "NotIsolated":
        raise NotCertifiedByOrder(
            resolve_budget(max_order, DEFAULT_LOCAL_ORDER),
            "the augmenting function's singularity did not certify as isolated",
        )
    if not g_type.is_simple:
        return SimplicityVerdict(NON_SIMPLE, "Theorem51")
    if f_codim == 1:
        return SimplicityVerdict(SIMPLE, "Theorem53")
    if g_type.corank == 0:
        if f_simple is None:
            return SimplicityVerdict(UNKNOWN, None)
        return SimplicityVerdict(SIMPLE if f_simple else NON_SIMPLE, "Theorem55")
    return SimplicityVerdict(UNKNOWN, None)


def catalog_verdict(
    germ: MapGerm, catalog: Catalog | None = None
) -> SimplicityVerdict | None:
    """Simplicity verdict by exact normal-form lookup, when stored."""
    match = catalog_lookup(germ, catalog)
    if match is None or match.simple is None:
        return None
    status = SIMPLE if match.simple else NON_SIMPLE
    return SimplicityVerdict(status, f"Catalog({match.entry.name})")


def simplicity_of_augmentation(
    f_codim: int,
    f_simple: bool | None,
    g: Polynomial,
    result: MapGerm | None = None,
    max_order: int | None = None,
) -> SimplicityVerdict:
    """The decision rules, with the catalog settling Unknown when it can."""
    verdict = decide_simplicity(f_codim, f_simple, g, max_order)
    if verdict.status == UNKNOWN and result is not None:
        stored = catalog_verdict(result)
        if stored is not None:
            return stored
    return verdict


def modality_of_augmentation(
    f_codim: int,
    g: Polynomial,
    mu_constant_qh: bool,
    max_order: int | None = None,
) -> int | None:
    """Modality of the augmentation, when the transfer rule applies.

    The rule needs a codimension-1 core and the caller's assertion that
    every deformation of g with the same Milnor number is quasihomogeneous
    (``mu_constant_qh``); the modality then equals that of g.  Returns None
    (unknown) when the preconditions fail or g's modality is beyond the
    implemented table.
    """
    if f_codim != 1 or not mu_constant_qh:
        return None
    return modality_of_function(g, max_order)


@dataclass(frozen=True)
class TableInstance:
    """One concrete member of a table family, built end to end."""

    label: str
    germ: MapGerm
    display_form: str
    codim: int
    exact: bool
    verdict: SimplicityVerdict


@dataclass(frozen=True)
class TableEntry:
    """One family row of the augmentation table."""

    tag: str
    dims: tuple[int, int]
    normal_form: str
    codim_formula: str
    constraint: str
    instances: tuple[TableInstance, ...]


TABLE_FAMILIES = ("3_P", "4_Q", "4²_k", "5_k", "5²", "5³")

# Representatives fed into the two slot families, by classifier label.
_SLOT_INSTANCES = ("A_1", "A_2", "A_3", "D_4")


def _slot_polynomial(label: str, variables: tuple[str, ...]) -> Polynomial:
    """A representative of the named simple class in the given variables.

    The first variable carries the defining monomials; the rest are padded
    with squares, which leaves the class unchanged.
    """
    u, v = variables[0], variables[1]
    forms = {
        "A_1": f"{u}^2",
        "A_2": f"{u}^3",
        "A_3": f"{u}^4",
        "D_4": f"{u}^3 + {v}^3",
    }
    if label not in forms:
        raise ValueError(f"no stored representative for {label}")
    text = forms[label]
    pad = variables[1:] if label != "D_4" else variables[2:]
    for name in pad:
        text += f" + {name}^2"
    ctx = VarContext.of(variables, "augmenting")
    return parse_polynomial(text, ctx)


def _family_instances(
    entry: CatalogEntry,
) -> tuple[tuple[str, int | None, Polynomial], ...]:
    """(label, k, augmenting function) triples for one table family."""
    out = []
    if entry.slot is not None:
        for label in _SLOT_INSTANCES:
            g = _slot_polynomial(label, entry.slot.variables)
            out.append((f"{entry.name}({entry.slot.symbol}={label})", None, g))
        return tuple(out)
    ctx = VarContext.of(entry.added_vars, "augmenting")
    if entry.k_range is not None:
        for k in (2, 3):
            g = parse_polynomial(_instantiate_text(entry.aug_template, k), ctx)
            out.append((entry.label(k), k, g))
        return tuple(out)
    g = parse_polynomial(entry.aug_template, ctx)
    return ((entry.name, None, g),)


def generate_table44(max_order: int | None = None) -> tuple[TableEntry, ...]:
    """Rebuild the six-family augmentation table end to end.

    Every instance is constructed by augmenting the stored core through its
    certified one-parameter family, with the codimension coming from the
    product rule and the verdict from the decision rules -- nothing is
    copied out of the catalog metadata.  Certification failures propagate.
    """
    catalog = load_catalog()
    rows = []
    for tag in TABLE_FAMILIES:
        entry = catalog.get(tag)
        core_entry = catalog.get(entry.core_name)
        instances = []
        for label, k, g in _family_instances(entry):
            core_k = _eval_k(entry.core_k, k) if entry.core_k is not None else None
            core, opsu = core_instance(core_entry, core_k)
            analysis = analyze_augmentation(core, opsu, g, max_order=max_order)
            verdict = decide_simplicity(
                analysis.f_codim, core_entry.simple, g, max_order
            )
            display = entry.instantiate(
                k, g if entry.slot is not None else None
            ).display()
            instances.append(
                TableInstance(
                    label,
                    analysis.result,
                    display,
                    analysis.codim_report.value,
                    analysis.codim_report.exact,
                    verdict,
                )
            )
        rows.append(
            TableEntry(
                entry.name,
                entry.dims,
                entry.normal_form(),
                entry.codim_formula,
                entry.constraint,
                tuple(instances),
            )
        )
    return tuple(rows)
