"""The stored classification tables: entries, instances, and lookups."""

from __future__ import annotations

import pytest

from germforge import (
    InvalidInput,
    ae_codim,
    catalog_lookup,
    core_instance,
    load_catalog,
)
from helpers import germ, poly

CORE_NAMES = ("t^3", "A2k_curve", "LB_k", "S", "11_{2k+1}", "5_1", "5_2", "5_3")


def test_catalog_loads_once_and_has_all_entries():
    cat = load_catalog()
    assert cat is load_catalog()
    assert len(cat.entries) == 21
    names = cat.names()
    assert len(set(names)) == 21
    for name in CORE_NAMES:
        assert name in names


def test_get_by_name_alias_and_miss():
    cat = load_catalog()
    assert cat.get("4^2_k") is cat.get("4²_k")
    assert cat.get("5^2") is cat.get("5²")
    with pytest.raises(InvalidInput):
        cat.get("no-such-entry")


def test_instantiate_validates_k():
    cat = load_catalog()
    sk = cat.get("S_k")
    with pytest.raises(InvalidInput):
        sk.instantiate()
    with pytest.raises(InvalidInput):
        sk.instantiate(0)
    with pytest.raises(InvalidInput):
        sk.instantiate(9)
    assert sk.instantiate(1).display() == "(y^2, y^3 + y*z^2, z)"
    with pytest.raises(InvalidInput):
        cat.get("F_4").instantiate(2)


def test_instantiate_validates_slot():
    cat = load_catalog()
    q_entry = cat.get("3_Q")
    with pytest.raises(InvalidInput):
        q_entry.instantiate()
    with pytest.raises(InvalidInput):
        q_entry.instantiate(slot_value=poly("w^2", "w"))
    inst = q_entry.instantiate(slot_value=poly("x^2 + y^2", "x y"))
    assert inst.display() == "(x, y, t^3 + t*x^2 + t*y^2)"
    with pytest.raises(InvalidInput):
        cat.get("S_k").instantiate(1, slot_value=poly("x^2", "x"))


def test_codim_formulas():
    cat = load_catalog()
    assert cat.get("S_k").codim_value(2) == 2
    assert cat.get("LB_k").codim_value(3) == 2
    assert cat.get("5_k").codim_value(3) == 2
    assert cat.get("F_4").codim_value() == 4
    assert cat.get("3_Q").codim_value(slot_value=poly("x^2 + y^3", "x y")) == 2
    with pytest.raises(InvalidInput):
        cat.get("3_Q").codim_value()


def test_instance_labels():
    cat = load_catalog()
    assert cat.get("S_k").label(2) == "S_2"
    assert cat.get("B_k").label(4) == "B_4"
    assert cat.get("11_{2k+1}").label(2) == "11_{5}"
    assert cat.get("5_k").label(3) == "5_3"
    q = poly("x^2 + y^2", "x y")
    assert cat.get("3_Q").label(slot_value=q) == "3_Q(Q=x^2 + y^2)"


def test_every_core_entry_certifies():
    cat = load_catalog()
    for name in CORE_NAMES:
        entry = cat.get(name)
        k = entry.k_range[0] if entry.k_range else None
        f, opsu = core_instance(entry, k)
        assert isinstance(opsu.certificate, int)
        assert opsu.unfolding.base() == f
        assert (f, opsu) == core_instance(entry, k)


def test_core_codim_formulas_match_recomputation():
    cat = load_catalog()
    cases = [("t^3", None), ("A2k_curve", 1), ("A2k_curve", 3), ("LB_k", 2),
             ("S", None), ("11_{2k+1}", 2), ("5_1", None), ("5_2", None)]
    for name, k in cases:
        entry = cat.get(name)
        f, _ = core_instance(entry, k)
        assert ae_codim(f).codim == entry.codim_value(k)


def test_opsu_unfolding_only_on_core_entries():
    cat = load_catalog()
    fam = cat.get("A2k_curve").opsu_unfolding(2)
    assert fam.display() == "(y^2, y^5 + y*l, l)"
    with pytest.raises(InvalidInput):
        cat.get("F_4").opsu_unfolding()


def test_lookup_recognises_renamed_members():
    cases = [
        ("b^2; b^5 + c^3*b; c", "b c", "F_4", None, 4, True, "F_4"),
        ("y^2; y^3 + z^2*y; z", "y z", "S_k", 1, 1, True, "S_1"),
        ("y^2; y^9 + z^2*y; z", "y z", "B_k", 4, 4, True, "B_4"),
        ("y^2; y^5 + z^4*y; z", "y z", "NonSimpleWitness", None, 6, False,
         "NonSimpleWitness"),
        ("x; t^3 + x^3*t", "x t", "LB_k", 3, 2, True, "LB_3"),
        ("u; v; s^5 + u*s + v*s^2", "s u v", "5_1", None, 1, True, "5_1"),
        ("x; y; z; t^5 + x*t + y*t^2 + z^2*t^3", "t x y z", "5_k", 2, 1,
         True, "5_2"),
    ]
    for comps, names, entry_name, k, codim, simple, label in cases:
        match = catalog_lookup(germ(comps, names))
        assert match is not None, comps
        assert match.entry.name == entry_name
        assert match.k == k
        assert match.codim == codim
        assert match.simple is simple
        assert match.label == label


def test_lookup_fills_slots():
    match = catalog_lookup(germ("a; b; s^3 + a^2*s + b^3*s", "a b s"))
    assert match.entry.name == "3_Q"
    assert str(match.slot_value) == "b^3 + a^2"
    assert match.codim == 2
    assert match.label == "3_Q(Q=b^3 + a^2)"

    match = catalog_lookup(
        germ("x; y; z; t^4 + x*t + y^2*t^2 + z^2*t^2", "t x y z")
    )
    assert match.entry.name == "4_Q"
    assert str(match.slot_value) == "y^2 + z^2"
    assert match.codim == 1


def test_lookup_round_trips_instances():
    cat = load_catalog()
    for name, k in [("S_k", 3), ("B_k", 2), ("4_1^k", 2), ("4²_k", 3),
                    ("11_{2k+1}", 2)]:
        inst = cat.get(name).instantiate(k)
        match = catalog_lookup(inst)
        assert match is not None
        assert (match.entry.name, match.k) == (name, k)


def test_lookup_is_syntactic_not_up_to_equivalence():
    assert catalog_lookup(germ("x; t^6 + x*t", "x t")) is None
    assert catalog_lookup(germ("y^2; y^4 + z^2*y; z", "y z")) is None
    # scaling makes this equivalent to a member, but lookup will not guess
    assert catalog_lookup(germ("y^2; y^5 + 2*z^3*y; z", "y z")) is None
