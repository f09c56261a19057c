"""Finite-dimensional quotients of local rings of function germs.

Everything here is about ``O_d / I`` for an ideal I generated by finitely
many polynomials vanishing at the origin.  The quotient is modelled order by
order: at jet order j, the ideal contributes the truncations of all products
(monomial of degree <= j - ord(gen)) * gen, and the surviving "standard"
monomials outside the pivot set span the truncated quotient.

Certification is Nakayama-style: if at order j no standard monomial has
total degree exactly j, then every degree-j monomial lies in I + m^(j+1),
hence m^j is contained in I, and the basis read off at order j is the basis
of the full quotient.  We search j = 1, 2, ... up to the budget and report
the first certified order; if none certifies, the honest answer is
NotCertifiedByOrder, never a number.

Pivot columns are chosen greedily in ascending graded-lex order, which makes
the standard-monomial basis the graded-lex smallest one and keeps reports
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .config import DEFAULT_LOCAL_ORDER, resolve_budget
from .errors import InvalidInput, NonSingularGerm, NotCertifiedByOrder
from .linalg import RowReducer, row_from_fractions
from .poly import Exponents, Polynomial, VarContext, grlex_key, jacobian, monomials_up_to


@dataclass(frozen=True)
class QuotientReport:
    """A certified finite-dimensional quotient.

    ``basis`` is in descending graded-lex order, so the constant monomial is
    always the last element.
    """

    ctx: VarContext
    dimension: int
    basis: tuple[Exponents, ...]
    certified_order: int


def quotient_dim(
    generators: Sequence[Polynomial], max_order: int | None = None
) -> QuotientReport:
    """Dimension and monomial basis of O_d / (generators), certified."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        raise InvalidInput("need at least one nonzero generator")
    ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise InvalidInput("generators live in different contexts")
        if g.constant_term() != 0:
            raise InvalidInput("generator does not vanish at the origin")
    budget = resolve_budget(max_order, DEFAULT_LOCAL_ORDER)
    nvars = len(ctx)
    orders = [g.order() or 0 for g in gens]
    for j in range(1, budget + 1):
        monos = monomials_up_to(nvars, j)
        col_of = {m: i for i, m in enumerate(monos)}
        reducer = RowReducer()
        for g, order in zip(gens, orders):
            for m in monos:
                if sum(m) + order > j:
                    continue
                product = g.mul_monomial(m).jet(j)
                reducer.insert(
                    row_from_fractions(
                        {col_of[e]: c for e, c in product.terms.items()}
                    )
                )
        taken = set(reducer.pivots)
        std = [m for i, m in enumerate(monos) if i not in taken]
        if all(sum(m) < j for m in std):
            basis = tuple(sorted(std, key=grlex_key, reverse=True))
            return QuotientReport(ctx, len(std), basis, j)
    raise NotCertifiedByOrder(budget, "quotient dimension did not stabilise")


def _require_singular(g: Polynomial) -> None:
    if g.is_zero():
        raise InvalidInput("the zero function has no isolated singularity")
    if g.constant_term() != 0:
        raise InvalidInput("function does not vanish at the origin")
    if not g.linear_part().is_zero():
        raise NonSingularGerm("function has a nonzero linear part at the origin")


def milnor(g: Polynomial, max_order: int | None = None) -> QuotientReport:
    """Milnor number: dimension of the Jacobian-ideal quotient."""
    _require_singular(g)
    return quotient_dim(jacobian(g), max_order)


def tjurina(g: Polynomial, max_order: int | None = None) -> QuotientReport:
    """Tjurina number: like :func:`milnor` but with g itself added."""
    _require_singular(g)
    return quotient_dim([g, *jacobian(g)], max_order)


def quotient_monomial_basis(
    g: Polynomial, max_order: int | None = None
) -> QuotientReport:
    """Monomial basis of O_d / (g + Jg), constant last.

    This is the basis the versal-unfolding construction deforms along; the
    convention that the constant sits in the final slot is what places the
    plain translation parameter last.
    """
    return tjurina(g, max_order)
