"""Simplicity and modality verdicts, and the generated family table."""

from __future__ import annotations

import pytest

from germforge import NotCertifiedByOrder, catalog_verdict, decide_simplicity
from germforge.simplicity import (
    NON_SIMPLE,
    SIMPLE,
    TABLE_FAMILIES,
    UNKNOWN,
    generate_table44,
    modality_of_augmentation,
    simplicity_of_augmentation,
)
from helpers import germ, poly


def test_nonsimple_augmenting_function_decides_nonsimple():
    g = poly("x^3 + y^3 + z^3 + x*y*z", "x y z")
    v = decide_simplicity(1, True, g)
    assert (v.status, v.justification) == (NON_SIMPLE, "Theorem51")
    assert v.decided


def test_nonsimple_rule_outranks_the_codimension_one_rule():
    g = poly("x^4 + x^2*y^2 + y^4", "x y")
    v = decide_simplicity(1, True, g)
    assert (v.status, v.justification) == (NON_SIMPLE, "Theorem51")


def test_codimension_one_cores_give_simple_augmentations():
    for expr, names in [("z^4", "z"), ("z^2", "z"), ("x^3 + y^4", "x y")]:
        v = decide_simplicity(1, None, poly(expr, names))
        assert (v.status, v.justification) == (SIMPLE, "Theorem53")


def test_morse_augmenting_functions_mirror_the_core():
    simple = decide_simplicity(2, True, poly("z^2", "z"))
    assert (simple.status, simple.justification) == (SIMPLE, "Theorem55")
    mixed = decide_simplicity(2, False, poly("y^2 + z^2", "y z"))
    assert (mixed.status, mixed.justification) == (NON_SIMPLE, "Theorem55")


def test_undecidable_combinations_stay_unknown():
    undecided = decide_simplicity(2, None, poly("z^2", "z"))
    assert (undecided.status, undecided.justification) == (UNKNOWN, None)
    assert not undecided.decided
    deeper = decide_simplicity(2, True, poly("z^3", "z"))
    assert (deeper.status, deeper.justification) == (UNKNOWN, None)


def test_uncertified_augmenting_function_is_refused():
    with pytest.raises(NotCertifiedByOrder):
        decide_simplicity(1, True, poly("x^2 * y", "x y"), max_order=8)


def test_catalog_verdict_by_exact_lookup():
    stored_simple = catalog_verdict(germ("y^2; y^5 + z^3*y; z", "y z"))
    assert (stored_simple.status, stored_simple.justification) == (
        SIMPLE,
        "Catalog(F_4)",
    )
    stored_not = catalog_verdict(germ("y^2; y^5 + z^4*y; z", "y z"))
    assert (stored_not.status, stored_not.justification) == (
        NON_SIMPLE,
        "Catalog(NonSimpleWitness)",
    )
    assert catalog_verdict(germ("x; t^6 + x*t", "x t")) is None


def test_catalog_settles_unknowns_for_the_same_core():
    # (y^2, y^5) has codimension 2 and z^3/z^4 are not Morse, so the rules
    # alone stay Unknown; the stored table disagrees between the two.
    f4 = simplicity_of_augmentation(
        2, True, poly("z^3", "z"), result=germ("y^2; y^5 + z^3*y; z", "y z")
    )
    assert (f4.status, f4.justification) == (SIMPLE, "Catalog(F_4)")
    witness = simplicity_of_augmentation(
        2, True, poly("z^4", "z"), result=germ("y^2; y^5 + z^4*y; z", "y z")
    )
    assert (witness.status, witness.justification) == (
        NON_SIMPLE,
        "Catalog(NonSimpleWitness)",
    )


def test_unknown_survives_when_the_catalog_cannot_help():
    v = simplicity_of_augmentation(2, True, poly("z^3", "z"))
    assert v.status == UNKNOWN
    off_table = simplicity_of_augmentation(
        2, True, poly("z^3", "z"), result=germ("y^2; y^7 + z^3*y; z", "y z")
    )
    assert off_table.status == UNKNOWN


def test_rule_verdicts_take_precedence_over_the_catalog():
    v = simplicity_of_augmentation(
        1, True, poly("z^2", "z"), result=germ("y^2; y^3 + y*z^2; z", "y z")
    )
    assert (v.status, v.justification) == (SIMPLE, "Theorem53")


def test_modality_transfer_for_codimension_one_cores():
    j10 = poly("x^3 + x^2*y^2 + y^6", "x y")
    assert modality_of_augmentation(1, j10, True) == 1
    assert modality_of_augmentation(1, poly("x^3 + y^4", "x y"), True) == 0
    assert modality_of_augmentation(2, j10, True) is None
    assert modality_of_augmentation(1, j10, False) is None
    assert modality_of_augmentation(1, poly("x^3 + y^7", "x y"), True) is None


def test_generated_table_has_the_six_families_in_order():
    table = generate_table44()
    assert tuple(row.tag for row in table) == TABLE_FAMILIES
    expected_codims = {
        "3_P": [1, 2, 3, 4],
        "4_Q": [1, 2, 3, 4],
        "4²_k": [2, 3],
        "5_k": [1, 2],
        "5²": [2],
        "5³": [3],
    }
    expected_rule = {
        "3_P": "Theorem53",
        "4_Q": "Theorem53",
        "4²_k": "Theorem55",
        "5_k": "Theorem53",
        "5²": "Theorem55",
        "5³": "Theorem55",
    }
    for row in table:
        assert [inst.codim for inst in row.instances] == expected_codims[row.tag]
        for inst in row.instances:
            assert inst.exact
            assert inst.verdict.status == SIMPLE
            assert inst.verdict.justification == expected_rule[row.tag]


def test_generated_table_instances_are_real_germs():
    table = generate_table44()
    by_tag = {row.tag: row for row in table}
    slot_row = by_tag["3_P"]
    labels = [inst.label for inst in slot_row.instances]
    assert labels == [
        "3_P(P=A_1)",
        "3_P(P=A_2)",
        "3_P(P=A_3)",
        "3_P(P=D_4)",
    ]
    first = slot_row.instances[0].germ
    assert (first.n, first.p) == (4, 4)
    assert by_tag["5_k"].instances[0].germ.display() == (
        "(x, y, t^5 + t^3*z^2 + y*t^2 + x*t, z)"
    )
    assert by_tag["5_k"].instances[0].display_form == (
        "(x, y, z, t^5 + t^3*z^2 + y*t^2 + x*t)"
    )


def test_rules_never_contradict_the_stored_table():
    table = generate_table44()
    for row in table:
        for inst in row.instances:
            stored = catalog_verdict(inst.germ)
            if stored is not None and inst.verdict.decided:
                assert stored.status == inst.verdict.status
