"""Weight systems and quasihomogeneity up to right equivalence."""

from __future__ import annotations

import pytest

from germforge import InvalidInput
from germforge.quasihomog import find_weights, is_r_equiv_quasihomogeneous
from helpers import poly


def test_weights_of_plane_curve():
    ws = find_weights(poly("x^3 + y^6", "x y"))
    assert ws.weights == (2, 1)
    assert ws.degree == 6


def test_weights_of_mixed_form():
    ws = find_weights(poly("x^2*y + y^4", "x y"))
    assert ws.weights == (3, 2)
    assert ws.degree == 8


def test_weights_cover_every_support_monomial():
    g = poly("x^3 + y^6 + x^2*y^2", "x y")
    ws = find_weights(g)
    assert ws.weights == (2, 1) and ws.degree == 6
    for exps in g.support():
        assert sum(w * e for w, e in zip(ws.weights, exps)) == ws.degree


def test_weights_are_primitive():
    ws = find_weights(poly("x^2 + y^2", "x y"))
    assert ws.weights == (1, 1)
    assert ws.degree == 2


def test_no_weights_for_inhomogeneous_support():
    assert find_weights(poly("x^3 + x^2 + y^2", "x y")) is None


def test_weights_reject_degenerate_inputs():
    with pytest.raises(InvalidInput):
        find_weights(poly("0", "x"))
    with pytest.raises(InvalidInput):
        find_weights(poly("1 + x", "x"))


def test_quasihomogeneous_by_weights():
    rep = is_r_equiv_quasihomogeneous(poly("z^2", "z"))
    assert rep.quasihomogeneous
    assert rep.via == "weights"
    assert rep.weights.weights == (1,)
    assert rep.mu is None and rep.tau is None


def test_quasihomogeneous_after_coordinate_change():
    # No weight system in these coordinates, but u = x + y, v = y turns it
    # into u^3 + v^4, so mu = tau = 6 settles it.
    g = poly("x^3 + 3*x^2*y + 3*x*y^2 + y^3 + y^4", "x y")
    assert find_weights(g) is None
    rep = is_r_equiv_quasihomogeneous(g)
    assert rep.quasihomogeneous
    assert rep.via == "mu_eq_tau"
    assert rep.mu == rep.tau == 6


def test_not_quasihomogeneous_when_mu_exceeds_tau():
    g = poly("z^4 + z^2*w^2 + w^7", "z w")
    assert find_weights(g) is None
    rep = is_r_equiv_quasihomogeneous(g)
    assert not rep.quasihomogeneous
    assert rep.via == "mu_eq_tau"
    assert rep.tau == 11
    assert rep.mu > rep.tau
