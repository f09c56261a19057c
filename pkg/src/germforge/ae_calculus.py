"""Jet-space model of the extended tangent space of a map-germ.

For f: (K^n,0) -> (K^p,0) the tangent space T of interest is spanned, over
the truncation at jet order k, by

* m * df/dx_j for every source monomial m of degree <= k (coordinate-change
  directions), and
* (mu o f) * e_i for every target monomial mu of degree <= k, including the
  constant (ambient-change directions),

all truncated to order k.  The cokernel inside the order-k jet space of
p-tuples is the truncated normal space; its dimension is nondecreasing in k
and reaches the true codimension once k passes the determinacy order.

Certification rule: report a codimension only when the value is stationary
across two consecutive orders and every standard monomial has total degree
<= k - 2, i.e. the normal space sits strictly below the truncation boundary
with a full degree of slack.  Otherwise raise NotCertifiedByOrder.  A
certified value of 0 is a stability certificate; a positive value at budget
is still a valid lower bound, which is how non-stability gets reported.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_MAP_ORDER, resolve_budget
from .errors import InvalidInput, NotCertifiedByOrder, NotStable
from .germs import MapGerm, Opsu, Unfolding
from .linalg import Row, RowReducer, row_from_fractions
from .poly import Exponents, Polynomial, grlex_key, monomials_up_to

# A vector field along f: one polynomial per target component, in f's source
# variables.
VectorField = tuple[Polynomial, ...]


@dataclass
class JetModel:
    """The order-k truncation of the tangent space, row-reduced."""

    f: MapGerm
    order: int
    columns: tuple[tuple[Exponents, int], ...]
    col_of: dict[tuple[Exponents, int], int]
    image: RowReducer
    normal: tuple[tuple[Exponents, int], ...]

    @property
    def codim(self) -> int:
        return len(self.normal)

    def field_row(self, field: Sequence[Polynomial]) -> Row:
        """Truncate a vector field to this order and index it as a row."""
        entries = {}
        for i, comp in enumerate(field):
            for exps, coeff in comp.jet(self.order).terms.items():
                entries[self.col_of[(exps, i)]] = coeff
        return row_from_fractions(entries)

    def contains(self, field: Sequence[Polynomial]) -> bool:
        return self.image.contains(self.field_row(field))

    def normal_fields(self) -> tuple[VectorField, ...]:
        """Monomial vector fields spanning the cokernel, ascending degree."""
        out = []
        for exps, i in self.normal:
            comps = [Polynomial.zero(self.f.ctx) for _ in range(self.f.p)]
            comps[i] = Polynomial.monomial(self.f.ctx, exps)
            out.append(tuple(comps))
        return tuple(out)


def tangent_image(f: MapGerm, order: int) -> JetModel:
    """Row-reduce the order-k truncation of the tangent space of f."""
    if order < 1:
        raise InvalidInput("jet order must be at least 1")
    n, p = f.n, f.p
    source_monos = monomials_up_to(n, order)
    columns = tuple(
        sorted(
            ((m, i) for m in source_monos for i in range(p)),
            key=lambda mc: (grlex_key(mc[0]), mc[1]),
        )
    )
    col_of = {mc: idx for idx, mc in enumerate(columns)}
    image = RowReducer()

    # Coordinate-change directions: m * (column j of the Jacobian of f).
    for name in f.ctx.names:
        partials = [c.diff(name) for c in f.components]
        orders = [q.order() for q in partials]
        min_order = min((o for o in orders if o is not None), default=order + 1)
        if min_order > order:
            continue
        for m in source_monos:
            if sum(m) + min_order > order:
                continue
            entries = {}
            for i, q in enumerate(partials):
                for exps, coeff in q.mul_monomial(m).jet(order).terms.items():
                    entries[col_of[(exps, i)]] = coeff
            image.insert(row_from_fractions(entries))

    # Ambient directions: (mu o f) * e_i for target monomials mu.
    target_monos = monomials_up_to(p, order)
    composed: dict[Exponents, Polynomial] = {}
    one = Polynomial.const(f.ctx, 1)
    for mu in target_monos:
        if not any(mu):
            composed[mu] = one
        else:
            a = next(i for i, e in enumerate(mu) if e)
            prev = mu[:a] + (mu[a] - 1,) + mu[a + 1 :]
            composed[mu] = composed[prev].mul_truncated(f.components[a], order)
        comp = composed[mu]
        if comp.is_zero():
            continue
        for i in range(p):
            entries = {
                col_of[(exps, i)]: coeff for exps, coeff in comp.terms.items()
            }
            image.insert(row_from_fractions(entries))

    taken = set(image.pivots)
    normal = tuple(mc for idx, mc in enumerate(columns) if idx not in taken)
    return JetModel(f, order, columns, col_of, image, normal)


@dataclass
class CodimReport:
    """A certified extended codimension with its normal basis."""

    f: MapGerm
    codim: int
    certified_order: int
    jet: JetModel

    @property
    def normal_monomials(self) -> tuple[tuple[Exponents, int], ...]:
        return self.jet.normal

    def normal_fields(self) -> tuple[VectorField, ...]:
        return self.jet.normal_fields()


def ae_codim(f: MapGerm, max_order: int | None = None) -> CodimReport:
    """Extended codimension of f, certified by jet stabilisation.

    The stationary window only opens at the maximal total degree of the
    components: below that, the truncation describes a different germ and a
    flat stretch of values means nothing.
    """
    budget = resolve_budget(max_order, DEFAULT_MAP_ORDER)
    faithful = max(c.degree() for c in f.components)
    previous: JetModel | None = None
    for k in range(max(1, faithful), budget + 1):
        model = tangent_image(f, k)
        if (
            previous is not None
            and model.codim == previous.codim
            and all(sum(m) <= k - 2 for m, _ in model.normal)
        ):
            return CodimReport(f, model.codim, k, model)
        previous = model
    detail = "tangent-space codimension did not stabilise"
    if previous is not None:
        detail += f" (last value {previous.codim})"
    raise NotCertifiedByOrder(budget, detail)


@dataclass
class VersalReport:
    versal: bool
    codim: int
    covered: int
    certified_order: int


def initial_speeds(unfolding: Unfolding) -> tuple[VectorField, ...]:
    """d/dl of the deformed components at parameter zero, one per parameter."""
    base = unfolding.base()
    zeros = {name: 0 for name in unfolding.parameter_names}
    fields = []
    for name in unfolding.parameter_names:
        comps = tuple(
            c.diff(name).substitute(zeros).restricted(base.ctx)
            for c in unfolding.components[: unfolding.p]
        )
        fields.append(comps)
    return tuple(fields)


def is_versal(unfolding: Unfolding, max_order: int | None = None) -> VersalReport:
    """Versality via the jet model: do the initial speeds span the cokernel?"""
    base = unfolding.base()
    report = ae_codim(base, max_order)
    if report.codim == 0:
        return VersalReport(True, 0, 0, report.certified_order)
    extra = RowReducer(parent=report.jet.image)
    covered = 0
    for field in initial_speeds(unfolding):
        if extra.insert(report.jet.field_row(field)) is not None:
            covered += 1
    return VersalReport(covered == report.codim, report.codim, covered, report.certified_order)


def check_opsu(unfolding: Unfolding, max_order: int | None = None) -> Opsu:
    """Certify that a one-parameter unfolding is stable as a map-germ.

    The unfolding, viewed as a germ in all its variables, must have
    certified extended codimension 0; a certified positive value raises
    NotStable with that lower bound.
    """
    if unfolding.m != 1:
        raise InvalidInput("a one-parameter stable unfolding has exactly one parameter")
    report = ae_codim(unfolding.as_map_germ(), max_order)
    if report.codim != 0:
        raise NotStable(report.codim)
    return Opsu(unfolding, report.certified_order)
