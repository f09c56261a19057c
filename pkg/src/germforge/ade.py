"""Classification of isolated function singularities into the simple types.

The decision tree uses only exact invariants:

* corank of the Hessian at the origin (0 gives A_1, 1 gives A_mu),
* for corank 2, the cubic form induced on the kernel of the Hessian.  The
  number of distinct roots of that binary cubic (read off the degree of the
  gcd of its partials) separates the D series, the E series, and the
  one-modal walls,
* corank >= 3 can never be simple.

Witnesses for non-simplicity name the modality-one stratum the germ sits on
when the Milnor number pins it down (corank 3 cubics live over the P8
family, vanishing kernel cubics over X9, triple-root kernel cubics over
J10), which is what the modality oracle reports.

The kernel cubic is computed by diagonalising the Hessian by an exact
congruence and restricting the degree-3 part to the kernel coordinates; the
degree-4-and-up corrections of a full splitting lemma cannot change that
cubic, so this is enough for the tree above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotCertifiedByOrder
from .local_algebra import milnor
from .poly import (
    Polynomial,
    VarContext,
    hessian_at_origin,
    hessian_corank_at_origin,
)

SIMPLE_TAGS = ("A", "D", "E")


@dataclass(frozen=True)
class FunctionType:
    """Outcome of :func:`classify_function`.

    ``tag`` is "A", "D" or "E" for the simple types (with ``index`` the
    subscript), "NonSimple" with a ``witness`` naming the stratum, or
    "NotIsolated" when the Milnor number did not certify within budget.
    """

    tag: str
    index: int | None = None
    witness: str | None = None
    mu: int | None = None
    corank: int | None = None

    @property
    def is_simple(self) -> bool:
        return self.tag in SIMPLE_TAGS

    def label(self) -> str:
        if self.tag in ("A", "D", "E"):
            return f"{self.tag}_{self.index}"
        if self.tag == "NonSimple":
            return f"NonSimple({self.witness})"
        return self.tag


def classify_function(g: Polynomial, max_order: int | None = None) -> FunctionType:
    """Place a singular function germ in the A/D/E hierarchy."""
    corank = hessian_corank_at_origin(g)  # also enforces the singularity pre
    try:
        mu = milnor(g, max_order).dimension
    except NotCertifiedByOrder:
        return FunctionType("NotIsolated", corank=corank)
    if corank == 0:
        assert mu == 1
        return FunctionType("A", index=1, mu=1, corank=0)
    if corank == 1:
        assert mu >= 2
        return FunctionType("A", index=mu, mu=mu, corank=1)
    if corank >= 3:
        return FunctionType("NonSimple", witness="P8", mu=mu, corank=corank)
    cubic = _kernel_cubic(g)
    if all(c == 0 for c in cubic):
        return FunctionType("NonSimple", witness="X9", mu=mu, corank=2)
    multiplicity = _cubic_root_multiplicity(cubic)
    if multiplicity <= 2:
        assert mu >= 4
        return FunctionType("D", index=mu, mu=mu, corank=2)
    if mu in (6, 7, 8):
        return FunctionType("E", index=mu, mu=mu, corank=2)
    return FunctionType("NonSimple", witness="J10plus", mu=mu, corank=2)


def is_morse(g: Polynomial) -> bool:
    """Nondegenerate critical point at the origin (A_1)."""
    return hessian_corank_at_origin(g) == 0


def modality_of_function(g: Polynomial, max_order: int | None = None) -> int | None:
    """0 for the simple types, 1 on the known unimodal walls, else None.

    The walls are recognised by witness plus exact Milnor number: P8 at
    mu=8, X9 at mu=9, J10 at mu=10.  Anything deeper is honestly unknown.
    """
    t = classify_function(g, max_order)
    if t.is_simple:
        return 0
    if t.tag == "NonSimple":
        if (t.witness, t.mu) in (("P8", 8), ("X9", 9), ("J10plus", 10)):
            return 1
    return None


def _congruent_diagonalization(
    h: list[list[Fraction]],
) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    """Return (D, P) with P invertible and P^T h P = D diagonal."""
    d = len(h)
    a = [row[:] for row in h]
    p = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]

    def add_col(dst: int, src: int, factor: Fraction) -> None:
        # basis change e_dst += factor * e_src, applied congruently
        for r in range(d):
            a[r][dst] += factor * a[r][src]
        for c in range(d):
            a[dst][c] += factor * a[src][c]
        for r in range(d):
            p[r][dst] += factor * p[r][src]

    def swap_col(i: int, j: int) -> None:
        for r in range(d):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        a[i], a[j] = a[j], a[i]
        for r in range(d):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    for i in range(d):
        if a[i][i] == 0:
            pivot = next((j for j in range(i + 1, d) if a[j][j] != 0), None)
            if pivot is not None:
                swap_col(i, pivot)
            else:
                partner = next((j for j in range(i + 1, d) if a[i][j] != 0), None)
                if partner is None:
                    continue
                add_col(i, partner, Fraction(1))
        for j in range(i + 1, d):
            if a[i][j] != 0:
                add_col(j, i, -a[i][j] / a[i][i])
    return a, p


def _kernel_cubic(g: Polynomial) -> list[Fraction]:
    """Coefficients [c0..c3] of the cubic induced on ker(Hessian), corank 2.

    c(u, v) = sum c_i u^i v^(3-i): the degree-3 part of g restricted to the
    kernel plane, in the basis produced by the diagonalisation.
    """
    h = hessian_at_origin(g)
    diag, p = _congruent_diagonalization(h)
    kernel_cols = [i for i in range(len(h)) if diag[i][i] == 0]
    assert len(kernel_cols) == 2
    uv = VarContext.of(("u", "v"))
    u = Polynomial.variable(uv, "u")
    v = Polynomial.variable(uv, "v")
    k1, k2 = kernel_cols
    bindings = {
        name: p[i][k1] * u + p[i][k2] * v for i, name in enumerate(g.ctx.names)
    }
    cubic = g.homogeneous_part(3).substitute(bindings)
    return [cubic.coefficient((i, 3 - i)) for i in range(4)]


def _cubic_root_multiplicity(coeffs: list[Fraction]) -> int:
    """Largest root multiplicity of a nonzero binary cubic over C.

    Equals 1 + deg gcd(c_u, c_v); the gcd degree counts repeated projective
    roots with multiplicity.
    """
    cu = [Fraction(i) * coeffs[i] for i in range(1, 4)]  # coeff of u^(i-1) v^(3-i)
    cv = [Fraction(3 - i) * coeffs[i] for i in range(0, 3)]  # coeff of u^i v^(2-i)
    return 1 + _binary_form_gcd_degree(cu, cv)


def _binary_form_gcd_degree(p: list[Fraction], q: list[Fraction]) -> int:
    """Degree of gcd of two binary forms given as coefficient lists.

    ``p[i]`` is the coefficient of u^i v^(n-i).  Common u and v powers are
    split off first; what remains has nonzero ends and reduces to a
    univariate gcd.
    """

    def split(form: list[Fraction]) -> tuple[int, int, list[Fraction]]:
        if not any(form):
            return (-1, -1, [])
        lo = next(i for i, c in enumerate(form) if c)
        hi = next(i for i in range(len(form) - 1, -1, -1) if form[i])
        return (lo, len(form) - 1 - hi, form[lo : hi + 1])

    lp, tp, pp = split(p)
    lq, tq, qq = split(q)
    if lp < 0 and lq < 0:
        return 0
    if lp < 0:
        return len(q) - 1
    if lq < 0:
        return len(p) - 1
    return min(lp, lq) + min(tp, tq) + _univariate_gcd_degree(pp, qq)


def _univariate_gcd_degree(p: list[Fraction], q: list[Fraction]) -> int:
    """Degree of gcd(p, q) for dense coefficient lists, low degree first."""

    def degree(f: list[Fraction]) -> int:
        for i in range(len(f) - 1, -1, -1):
            if f[i]:
                return i
        return -1

    def remainder(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
        a = a[:]
        da, db = degree(a), degree(b)
        while da >= db:
            factor = a[da] / b[db]
            shift = da - db
            for i in range(db + 1):
                a[i + shift] -= factor * b[i]
            da = degree(a)
        return a[: da + 1]

    a, b = p[:], q[:]
    while degree(b) >= 0:
        a, b = b, remainder(a, b)
    return degree(a)
