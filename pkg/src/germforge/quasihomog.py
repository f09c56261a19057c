"""Quasihomogeneity of function germs.

A germ g is quasihomogeneous for positive integer weights w_1..w_d if every
monomial in its support has the same weighted degree.  Finding such weights
is a linear problem: the support exponents impose equal weighted degree, the
solution space is a rational nullspace, and positivity of the weights is a
strict linear feasibility question which we settle exactly with
Fourier-Motzkin elimination (dimensions here are tiny).

For the coordinate-change-invariant notion we also accept the classical
numerical criterion: an isolated singularity is right-equivalent to a
quasihomogeneous one exactly when its Milnor and Tjurina numbers agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import InvalidInput
from .linalg import rational_nullspace
from .local_algebra import milnor, tjurina
from .poly import Polynomial


@dataclass(frozen=True)
class WeightSystem:
    """Primitive positive integer weights and the common weighted degree."""

    weights: tuple[int, ...]
    degree: int


@dataclass(frozen=True)
class QuasihomReport:
    quasihomogeneous: bool
    weights: WeightSystem | None
    via: str  # "weights" | "mu_eq_tau"
    mu: int | None
    tau: int | None


def _feasible_positive(rows: list[list[Fraction]]) -> list[Fraction] | None:
    """A point with row . x > 0 for every row, or None.

    Homogeneous strict inequalities; Fourier-Motzkin with witness
    reconstruction on the way back up.
    """
    nvars = len(rows[0]) if rows else 0
    constraints = [row[:] for row in rows]

    def solve(system: list[list[Fraction]], width: int) -> list[Fraction] | None:
        if width == 0:
            return [] if not system else None
        lowers: list[list[Fraction]] = []  # x_last > expr
        uppers: list[list[Fraction]] = []  # x_last < expr
        passed: list[list[Fraction]] = []
        for row in system:
            coef = row[width - 1]
            rest = row[: width - 1]
            if coef == 0:
                if not any(rest):
                    return None  # the constraint reads 0 > 0
                passed.append(rest)
            elif coef > 0:
                lowers.append([-(a / coef) for a in rest])
            else:
                uppers.append([-(a / coef) for a in rest])
        for lo in lowers:
            for up in uppers:
                diff = [u - l for u, l in zip(up, lo)]
                if any(diff):
                    passed.append(diff)
                else:
                    # lower bound meets upper bound exactly: empty interval
                    return None
        point = solve(passed, width - 1)
        if point is None:
            return None
        lo_vals = [sum(a * b for a, b in zip(lo, point)) for lo in lowers]
        up_vals = [sum(a * b for a, b in zip(up, point)) for up in uppers]
        if lo_vals and up_vals:
            value = (max(lo_vals) + min(up_vals)) / 2
        elif lo_vals:
            value = max(lo_vals) + 1
        elif up_vals:
            value = min(up_vals) - 1
        else:
            value = Fraction(0)
        return point + [value]

    return solve(constraints, nvars)


def find_weights(g: Polynomial) -> WeightSystem | None:
    """Positive integer weights making g weighted-homogeneous, if any."""
    if g.is_zero():
        raise InvalidInput("the zero function has no weight system")
    if g.constant_term() != 0:
        raise InvalidInput("function does not vanish at the origin")
    d = len(g.ctx)
    support = g.support()
    # Unknowns (w_1..w_d, w0) with <a, w> - w0 = 0 for every support exponent.
    matrix = [[Fraction(e) for e in exps] + [Fraction(-1)] for exps in support]
    kernel = rational_nullspace(matrix)
    if not kernel:
        return None
    # Positivity of each w_i, expressed in nullspace coordinates.
    rows = [[vec[i] for vec in kernel] for i in range(d)]
    point = _feasible_positive(rows)
    if point is None:
        return None
    solution = [
        sum(c * vec[i] for c, vec in zip(point, kernel)) for i in range(d + 1)
    ]
    scale = lcm(*(v.denominator for v in solution)) if solution else 1
    ints = [int(v * scale) for v in solution]
    g0 = 0
    for v in ints:
        g0 = gcd(g0, v)
    if g0 > 1:
        ints = [v // g0 for v in ints]
    weights = tuple(ints[:d])
    assert all(w > 0 for w in weights)
    return WeightSystem(weights, ints[d])


def is_r_equiv_quasihomogeneous(
    g: Polynomial, max_order: int | None = None
) -> QuasihomReport:
    """Is g right-equivalent to a quasihomogeneous germ?

    Tries an explicit weight system first (no certification needed); falls
    back to the mu = tau test, which requires both quotients to certify.
    """
    ws = find_weights(g)
    if ws is not None:
        return QuasihomReport(True, ws, "weights", None, None)
    mu = milnor(g, max_order).dimension
    tau = tjurina(g, max_order).dimension
    return QuasihomReport(mu == tau, None, "mu_eq_tau", mu, tau)
