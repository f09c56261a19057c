"""Exact sparse polynomials: contexts, arithmetic, calculus, reshaping."""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from germforge import (
    ContextMismatch,
    InvalidInput,
    NonSingularGerm,
    Polynomial,
    UnknownVariable,
    VarContext,
)
from germforge.poly import (
    grlex_key,
    hessian_corank_at_origin,
    jacobian,
    monomial_str,
    monomials_up_to,
)
from helpers import ctx_of, poly


def test_context_rejects_duplicates_and_bad_roles():
    with pytest.raises(InvalidInput):
        VarContext.of(("x", "x"), "source")
    with pytest.raises(InvalidInput):
        VarContext.of(("x",), "flavour")


def test_context_lookup_and_roles():
    ctx = ctx_of("x y").extend(("l",), "parameter")
    assert len(ctx) == 3
    assert ctx.index("l") == 2
    assert ctx.has("y") and not ctx.has("z")
    assert ctx.role_of("l") == "parameter"
    assert ctx.with_role("source") == ("x", "y")
    assert ctx.restrict(("x", "l")).names == ("x", "l")


def test_extend_rejects_collisions():
    with pytest.raises(InvalidInput):
        ctx_of("x y").extend(("y",), "parameter")


def test_arithmetic_matches_expanded_forms():
    x = poly("x", "x y")
    y = poly("y", "x y")
    assert (x + y) ** 2 == poly("x^2 + 2*x*y + y^2", "x y")
    assert (x - y) * (x + y) == poly("x^2 - y^2", "x y")
    assert 3 * x - x == 2 * x
    assert x * 0 == Polynomial.zero(x.ctx)


def test_fraction_coefficients_stay_exact():
    x = poly("x", "x")
    half = Fraction(1, 2) * x
    assert (half + half) == x
    assert half.coefficient((1,)) == Fraction(1, 2)


def test_mixed_context_operands_are_rejected():
    with pytest.raises(ContextMismatch):
        poly("x", "x") + poly("y", "y")


def test_degree_order_and_parts():
    g = poly("x^3 + x*y + 4", "x y")
    assert g.degree() == 3
    assert g.order() == 0
    assert (g - 4).order() == 2
    assert Polynomial.zero(g.ctx).order() is None
    assert g.constant_term() == 4
    assert g.linear_part().is_zero()
    assert g.homogeneous_part(2) == poly("x*y", "x y")
    assert poly("x + x^2", "x y").linear_part() == poly("x", "x y")


def test_jet_truncates_by_total_degree():
    g = poly("x^4 + x^2*y^2 + x*y + y^5", "x y")
    assert g.jet(3) == poly("x*y", "x y")
    assert g.jet(4) == poly("x^4 + x^2*y^2 + x*y", "x y")


def test_mul_truncated_agrees_with_full_product():
    a = poly("x^2 + y^3 + 1", "x y")
    b = poly("x*y + y^2 + x^4", "x y")
    for cap in range(0, 8):
        assert a.mul_truncated(b, cap) == (a * b).jet(cap)


def test_power_requires_nonnegative_integer():
    x = poly("x", "x")
    assert x**0 == Polynomial.const(x.ctx, 1)
    with pytest.raises(InvalidInput):
        x ** (-1)


def test_sorted_terms_ascend_in_graded_lex():
    g = poly("x^3 + x*y*z + y^3 + z^3 + x*y + 1", "x y z")
    keys = [grlex_key(e) for e, _ in g.sorted_terms()]
    assert keys == sorted(keys)


def test_display_descends_and_round_trips():
    g = poly("y^6 + x^2*y^2 + x^3 - x*y + 2", "x y")
    assert str(g) == "y^6 + x^2*y^2 + x^3 - x*y + 2"
    assert poly(str(g), "x y") == g
    assert str(Polynomial.zero(g.ctx)) == "0"
    assert str(poly("2/3*x", "x y")) == "2/3*x"


def test_substitute_is_composition():
    g = poly("x^2 + y^3", "x y")
    u = poly("t + s^2", "s t")
    v = poly("s*t", "s t")
    image = g.substitute({"x": u, "y": v})
    assert image == u * u + v * v * v
    assert image.ctx == u.ctx


def test_substitute_scalars_and_passthrough():
    f = poly("y^2 + y*l", "y l")
    assert f.substitute({"l": 0}) == poly("y^2", "y l")
    shifted = f.substitute({"l": Fraction(1, 3)})
    assert shifted == poly("y^2 + 1/3*y", "y l")


def test_substitute_requires_passthrough_names_in_target():
    f = poly("x + y", "x y")
    u = poly("t", "t")
    with pytest.raises(UnknownVariable):
        f.substitute({"x": u})  # y does not exist alongside t
    with pytest.raises(ContextMismatch):
        f.substitute({"x": u, "y": poly("s", "s")})


def test_embed_and_restrict_round_trip():
    small = poly("y^2 + 2*y", "y")
    big = small.embed(ctx_of("x y z"))
    assert big == poly("y^2 + 2*y", "x y z")
    assert big.restricted(small.ctx) == small
    with pytest.raises(ContextMismatch):
        poly("x*y", "x y").restricted(ctx_of("x"))


def test_diff_and_jacobian():
    g = poly("x^2*y + y^4", "x y")
    assert g.diff("x") == poly("2*x*y", "x y")
    assert g.diff("y") == poly("x^2 + 4*y^3", "x y")
    assert jacobian(g) == [g.diff("x"), g.diff("y")]


def test_monomials_up_to_counts():
    for nvars in (1, 2, 3):
        for cap in (0, 1, 4):
            expected = comb(nvars + cap, cap)
            assert len(monomials_up_to(nvars, cap)) == expected


def test_monomial_str_forms():
    ctx = ctx_of("x y")
    assert monomial_str(ctx, (0, 0)) == "1"
    assert monomial_str(ctx, (1, 0)) == "x"
    assert monomial_str(ctx, (2, 3)) == "x^2*y^3"


def test_hessian_corank():
    assert hessian_corank_at_origin(poly("x^2 + y^2", "x y")) == 0
    assert hessian_corank_at_origin(poly("x^2 + y^3", "x y")) == 1
    assert hessian_corank_at_origin(poly("x^3 + y^3", "x y")) == 2
    with pytest.raises(NonSingularGerm):
        hessian_corank_at_origin(poly("x + y^2", "x y"))


def test_polynomials_are_immutable_and_hashable():
    g = poly("x^2", "x")
    with pytest.raises(AttributeError):
        g.terms = {}
    assert len({g, poly("x^2", "x"), poly("x^3", "x")}) == 2
