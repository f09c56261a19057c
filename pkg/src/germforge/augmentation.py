"""Codimension and versal unfoldings of augmented map-germs.

Feeding a singular function g into the parameter slot of a one-parameter
stable unfolding of f multiplies codimensions: the augmented germ has
extended codimension at least ae_codim(f) * tjurina(g), with equality
whenever g is quasihomogeneous up to right equivalence or the unfolding is
substantial.  The witnesses behind the product are explicit -- a monomial
basis of the Tjurina quotient of g on one side, a basis of the normal space
of f led by the unfolding speed on the other -- and pairing them off yields
a versal unfolding of the augmentation with exactly one parameter per pair.

:func:`analyze_augmentation` gathers those witnesses, :func:`build_versal`
assembles the unfolding, :func:`verify_versal` re-checks it against the
independent jet criterion, and :func:`lifted_fields` exposes the paired
fields themselves so their independence can be tested directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ae_calculus import (
    CodimReport,
    VectorField,
    ae_codim,
    initial_speeds,
    is_versal,
)
from .errors import HypothesesUnmet, InvalidInput, NotAnUnfoldingOf
from .germs import MapGerm, Opsu, SubstantialFlag, Unfolding, augment
from .linalg import RowReducer
from .local_algebra import QuotientReport, quotient_monomial_basis
from .poly import Polynomial, VarContext
from .quasihomog import is_r_equiv_quasihomogeneous


@dataclass(frozen=True)
class AugCodimReport:
    """The codimension product for an augmentation.

    ``exact`` is False when neither hypothesis (quasihomogeneous up to right
    equivalence, or substantial unfolding) could be established; the value
    is then only a lower bound.  ``via`` names the hypothesis that made the
    value exact: "quasihomogeneous", "substantial", or "lower_bound".
    """

    value: int
    exact: bool
    via: str
    f_codim: int
    tau: int


def augmentation_codim(
    f_codim: int,
    g: Polynomial,
    substantial: SubstantialFlag = SubstantialFlag(False),
    max_order: int | None = None,
) -> AugCodimReport:
    """Codimension of an augmentation from the codimension of its core.

    Returns f_codim * tjurina(g), marked exact when g is quasihomogeneous up
    to right equivalence or the unfolding was asserted substantial, and as a
    lower bound otherwise.  Certification failures in the Tjurina quotient
    propagate.
    """
    if f_codim < 0:
        raise InvalidInput("codimension must be nonnegative")
    tau = quotient_monomial_basis(g, max_order).dimension
    value = f_codim * tau
    if substantial.asserted:
        return AugCodimReport(value, True, "substantial", f_codim, tau)
    if is_r_equiv_quasihomogeneous(g, max_order).quasihomogeneous:
        return AugCodimReport(value, True, "quasihomogeneous", f_codim, tau)
    return AugCodimReport(value, False, "lower_bound", f_codim, tau)


@dataclass(frozen=True, eq=False)
class AugmentedGerm:
    """An augmentation together with the witnesses of its codimension.

    ``tau_basis`` is a monomial basis of the Tjurina quotient of the
    augmenting function (constant last); ``gamma_basis`` spans the normal
    space of the core germ and always starts with the unfolding speed.  The
    versal construction deforms along all tau/gamma pairs.
    """

    result: MapGerm
    f: MapGerm
    opsu: Opsu
    g: Polynomial
    tau_basis: tuple[Polynomial, ...]
    gamma_basis: tuple[VectorField, ...]
    substantial: SubstantialFlag
    f_report: CodimReport
    tau_report: QuotientReport
    codim_report: AugCodimReport

    @property
    def tau(self) -> int:
        return len(self.tau_basis)

    @property
    def f_codim(self) -> int:
        return len(self.gamma_basis)


def analyze_augmentation(
    f: MapGerm,
    opsu: Opsu,
    g: Polynomial,
    substantial: SubstantialFlag = SubstantialFlag(False),
    max_order: int | None = None,
) -> AugmentedGerm:
    """Build the augmentation and collect its versal-unfolding ingredients.

    Requires the core germ to be non-stable: for a stable core the
    unfolding speed is absorbed by the tangent space and the construction
    has nothing to deform.  The speed is checked to be nonzero in the normal
    space, then completed to a basis with monomial fields, in ascending
    degree order.
    """
    result = augment(f, opsu, g)
    f_report = ae_codim(f, max_order)
    if f_report.codim == 0:
        raise HypothesesUnmet(
            "the core germ is stable; augmentation needs codimension at least 1"
        )
    tau_report = quotient_monomial_basis(g, max_order)
    tau_basis = tuple(Polynomial.monomial(g.ctx, e) for e in tau_report.basis)

    speed = initial_speeds(opsu.unfolding)[0]
    jet = f_report.jet
    extended = RowReducer(parent=jet.image)
    if extended.insert(jet.field_row(speed)) is None:
        raise HypothesesUnmet(
            "the unfolding speed vanishes in the normal space of the core germ"
        )
    gammas = [speed]
    for field in f_report.normal_fields():
        if len(gammas) == f_report.codim:
            break
        if extended.insert(jet.field_row(field)) is not None:
            gammas.append(field)
    # The monomial fields span the cokernel, so the greedy pass always
    # completes the basis.
    assert len(gammas) == f_report.codim

    codim_report = augmentation_codim(f_report.codim, g, substantial, max_order)
    return AugmentedGerm(
        result,
        f,
        opsu,
        g,
        tau_basis,
        tuple(gammas),
        substantial,
        f_report,
        tau_report,
        codim_report,
    )


def _fresh_parameter_names(ctx: VarContext, tau: int, codim: int) -> tuple[str, ...]:
    prefix = "l"
    while any(
        ctx.has(f"{prefix}{s}_{m}")
        for s in range(1, tau + 1)
        for m in range(1, codim + 1)
    ):
        prefix += "l"
    return tuple(
        f"{prefix}{s}_{m}"
        for s in range(1, tau + 1)
        for m in range(1, codim + 1)
    )


def build_versal(aug: AugmentedGerm) -> Unfolding:
    """A versal unfolding of the augmentation, one parameter per basis pair.

    The first parameter of every Tjurina block deforms the value fed into
    the unfolding slot; the remaining ones add the paired normal field,
    scaled by the block's monomial.  Specialising every parameter to zero
    recovers the augmentation.  Refuses when the codimension product is
    only a lower bound, since versality would then be unsupported.
    """
    if not aug.codim_report.exact:
        raise HypothesesUnmet(
            "versal construction needs the augmenting function quasihomogeneous"
            " up to right equivalence, or a substantial unfolding"
        )
    tau, codim = aug.tau, aug.f_codim
    names = _fresh_parameter_names(aug.result.ctx, tau, codim)
    big = aug.result.ctx.extend(names, "parameter")
    param = {
        (s, m): Polynomial.variable(big, names[(s - 1) * codim + (m - 1)])
        for s in range(1, tau + 1)
        for m in range(1, codim + 1)
    }

    slot_value = aug.g.embed(big)
    for s in range(1, tau + 1):
        slot_value = slot_value + param[(s, 1)] * aug.tau_basis[s - 1].embed(big)

    unfolding = aug.opsu.unfolding
    comps = [
        c.substitute({aug.opsu.parameter: slot_value})
        for c in unfolding.components[: unfolding.p]
    ]
    for s in range(1, tau + 1):
        block = aug.tau_basis[s - 1].embed(big)
        for m in range(2, codim + 1):
            scale = param[(s, m)] * block
            field = aug.gamma_basis[m - 1]
            comps = [
                comp + scale * field[i].embed(big) for i, comp in enumerate(comps)
            ]
    comps += [Polynomial.variable(big, z) for z in aug.g.ctx.names]
    comps += [Polynomial.variable(big, q) for q in names]
    return Unfolding(big, tuple(comps))


def verify_versal(
    aug: AugmentedGerm, unfolding: Unfolding, max_order: int | None = None
) -> bool:
    """Re-check a claimed versal unfolding of the augmentation.

    The unfolding must restrict to the augmentation, carry exactly as many
    parameters as the codimension product, and pass the independent
    initial-speed jet criterion.
    """
    if unfolding.base() != aug.result:
        raise NotAnUnfoldingOf("the unfolding does not restrict to the augmentation")
    count_ok = unfolding.m == aug.codim_report.value
    return is_versal(unfolding, max_order).versal and count_ok


def lifted_fields(aug: AugmentedGerm) -> tuple[VectorField, ...]:
    """The paired fields tau * gamma, as fields along the augmentation.

    Each Tjurina-basis monomial multiplies each normal-space field of the
    core; the components over the augmenting coordinates are zero.  Order
    matches the versal parameters: Tjurina-major, normal-field-minor.
    """
    ctx = aug.result.ctx
    zero = Polynomial.zero(ctx)
    padding = (zero,) * len(aug.g.ctx)
    out = []
    for tau_mono in aug.tau_basis:
        block = tau_mono.embed(ctx)
        for field in aug.gamma_basis:
            out.append(tuple(block * comp.embed(ctx) for comp in field) + padding)
    return tuple(out)


@dataclass(frozen=True)
class LiftedFieldsReport:
    """Independence check of the paired fields in the augmentation's jets."""

    count: int
    nonzero: tuple[bool, ...]
    rank: int
    certified_order: int

    @property
    def independent(self) -> bool:
        return self.rank == self.count

    @property
    def ok(self) -> bool:
        return all(self.nonzero) and self.independent


def check_lifted_fields(
    aug: AugmentedGerm, max_order: int | None = None
) -> LiftedFieldsReport:
    """Are all paired fields nonzero and independent in the normal space?

    Runs the jet model of the augmentation itself, so this is an
    independent cross-check of the codimension product: the pairs must
    contribute a full set of directions there.
    """
    report = ae_codim(aug.result, max_order)
    jet = report.jet
    fields = lifted_fields(aug)
    nonzero = tuple(not jet.contains(field) for field in fields)
    extended = RowReducer(parent=jet.image)
    rank = 0
    for field in fields:
        if extended.insert(jet.field_row(field)) is not None:
            rank += 1
    return LiftedFieldsReport(len(fields), nonzero, rank, report.certified_order)
