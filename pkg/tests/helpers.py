"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

from fractions import Fraction

from germforge import (
    MapGerm,
    Opsu,
    Polynomial,
    Unfolding,
    VarContext,
    check_opsu,
    parse_polynomial,
)


def ctx_of(names: str, role: str = "source") -> VarContext:
    return VarContext.of(tuple(names.split()), role)


def poly(text: str, names: str, role: str = "source") -> Polynomial:
    return parse_polynomial(text, ctx_of(names, role))


def germ(components: str, names: str) -> MapGerm:
    ctx = ctx_of(names)
    parts = tuple(parse_polynomial(c.strip(), ctx) for c in components.split(";"))
    return MapGerm(ctx, parts)


def unfolding(components: str, names: str, parameters: str) -> Unfolding:
    ctx = ctx_of(names).extend(tuple(parameters.split()), "parameter")
    parts = tuple(parse_polynomial(c.strip(), ctx) for c in components.split(";"))
    return Unfolding(ctx, parts)


def cusp_family(power: int) -> tuple[MapGerm, Opsu]:
    """The plane-curve core (y^2, y^power) with its certified standard
    one-parameter stable unfolding (y^2, y^power + y*l, l)."""
    core = germ(f"y^2; y^{power}", "y")
    family = unfolding(f"y^2; y^{power} + y*l; l", "y", "l")
    return core, check_opsu(family)


def dense_rank(matrix: list[list[Fraction]]) -> int:
    """Textbook Gaussian elimination, written from scratch so the suite has
    a second opinion that shares no code with the package."""
    rows = [row[:] for row in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / lead
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def univariate_ideal_codim(gens: list[list[int]], cap: int) -> int:
    """Brute-force dimension of K[x]/(gens) by monomial enumeration.

    Each generator is a dense coefficient list indexed by exponent.  The row
    space collects every shift x^s * gen that stays inside degree cap, and
    the codimension is the number of monomials x^0..x^cap the rows miss.
    The caller must pick cap past the degree where the ideal swallows every
    higher power, or the count overshoots.
    """
    rows = []
    for gen in gens:
        degree = len(gen) - 1
        for shift in range(cap - degree + 1):
            row = [Fraction(0)] * (cap + 1)
            for exponent, coefficient in enumerate(gen):
                row[shift + exponent] = Fraction(coefficient)
            rows.append(row)
    return (cap + 1) - dense_rank(rows)


def drop_parameter(family: Unfolding, name: str) -> Unfolding:
    """The same unfolding with one parameter frozen at zero."""
    kept = tuple(n for n in family.ctx.names if n != name)
    ctx = family.ctx.restrict(kept)
    comps = []
    for index, comp in enumerate(family.components):
        if index >= family.p and comp == Polynomial.variable(family.ctx, name):
            continue
        comps.append(comp.substitute({name: 0}).restricted(ctx))
    return Unfolding(ctx, tuple(comps))
