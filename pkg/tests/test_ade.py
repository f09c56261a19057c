"""Placement of function germs in the simple-singularity hierarchy."""

from __future__ import annotations

import pytest

from germforge import NonSingularGerm
from germforge.ade import classify_function, is_morse, modality_of_function
from helpers import poly

SIMPLE_CASES = [
    ("x^2 + y^2", "x y", "A", 1),
    ("x^3 + y^2", "x y", "A", 2),
    ("x^4 + y^2", "x y", "A", 3),
    ("x^5 + y^2", "x y", "A", 4),
    ("x^6 + y^2", "x y", "A", 5),
    ("x^7 + y^2", "x y", "A", 6),
    ("x^2*y + y^3", "x y", "D", 4),
    ("x^2*y + y^4", "x y", "D", 5),
    ("x^2*y + y^5", "x y", "D", 6),
    ("x^3 + y^4", "x y", "E", 6),
    ("x^3 + x*y^3", "x y", "E", 7),
    ("x^3 + y^5", "x y", "E", 8),
]


@pytest.mark.parametrize("expr,names,tag,index", SIMPLE_CASES)
def test_simple_types(expr, names, tag, index):
    t = classify_function(poly(expr, names))
    assert (t.tag, t.index) == (tag, index)
    assert t.mu == index
    assert t.is_simple
    assert t.label() == f"{tag}_{index}"
    assert modality_of_function(poly(expr, names)) == 0


def test_one_variable_cusp_is_a2():
    t = classify_function(poly("z^3", "z"))
    assert (t.tag, t.index, t.corank) == ("A", 2, 1)


def test_corank_three_cubic_is_not_simple():
    t = classify_function(poly("x^3 + y^3 + z^3 + x*y*z", "x y z"))
    assert t.tag == "NonSimple"
    assert t.witness == "P8"
    assert t.mu == 8
    assert t.corank == 3
    assert t.label() == "NonSimple(P8)"
    assert modality_of_function(poly("x^3 + y^3 + z^3 + x*y*z", "x y z")) == 1


def test_corank_two_without_cubic_part_is_not_simple():
    t = classify_function(poly("x^4 + x^2*y^2 + y^4", "x y"))
    assert t.tag == "NonSimple"
    assert t.witness == "X9"
    assert t.mu == 9
    assert modality_of_function(poly("x^4 + x^2*y^2 + y^4", "x y")) == 1


def test_triple_root_cubic_past_the_exceptional_range():
    g = poly("x^3 + x^2*y^2 + y^6", "x y")
    t = classify_function(g)
    assert t.tag == "NonSimple"
    assert t.witness == "J10plus"
    assert t.mu == 10
    assert modality_of_function(g) == 1


def test_deeper_strata_have_unknown_modality():
    g = poly("x^3 + y^7", "x y")
    t = classify_function(g)
    assert t.tag == "NonSimple"
    assert t.witness == "J10plus"
    assert t.mu == 12
    assert modality_of_function(g) is None


def test_not_isolated_is_reported_not_guessed():
    t = classify_function(poly("x^2 * y", "x y"), max_order=8)
    assert t.tag == "NotIsolated"
    assert t.mu is None
    assert t.index is None
    assert not t.is_simple
    assert t.label() == "NotIsolated"
    assert modality_of_function(poly("x^2 * y", "x y"), max_order=8) is None


def test_morse_detection():
    assert is_morse(poly("z^2", "z"))
    assert is_morse(poly("x^2 - y^2", "x y"))
    assert not is_morse(poly("z^3", "z"))


def test_nonsingular_input_is_refused():
    with pytest.raises(NonSingularGerm):
        classify_function(poly("x + y^2", "x y"))
