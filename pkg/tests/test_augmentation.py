"""The codimension product and versal unfoldings of augmentations."""

from __future__ import annotations

import pytest

from germforge import (
    HypothesesUnmet,
    InvalidInput,
    NotAnUnfoldingOf,
    NotCertifiedByOrder,
    Opsu,
    Polynomial,
    SubstantialFlag,
    Unfolding,
    analyze_augmentation,
    augmentation_codim,
    build_versal,
    check_lifted_fields,
    is_versal,
    lifted_fields,
    verify_versal,
)
from helpers import cusp_family, drop_parameter, germ, poly, unfolding


def test_codim_product_with_quasihomogeneous_augmenting_function():
    rep = augmentation_codim(1, poly("z^3", "z"))
    assert rep.value == 2
    assert rep.exact
    assert rep.via == "quasihomogeneous"
    assert (rep.f_codim, rep.tau) == (1, 2)


def test_codim_product_lower_bound_without_hypotheses():
    g = poly("z^4 + z^2*w^2 + w^7", "z w")
    rep = augmentation_codim(1, g)
    assert rep.value == 11
    assert not rep.exact
    assert rep.via == "lower_bound"


def test_codim_product_substantial_assertion_makes_it_exact():
    g = poly("z^4 + z^2*w^2 + w^7", "z w")
    rep = augmentation_codim(3, g, SubstantialFlag(asserted=True))
    assert rep.value == 33
    assert rep.exact
    assert rep.via == "substantial"


def test_codim_product_rejects_negative_codimension():
    with pytest.raises(InvalidInput):
        augmentation_codim(-1, poly("z^2", "z"))


def test_codim_product_propagates_certification_failure():
    with pytest.raises(NotCertifiedByOrder):
        augmentation_codim(1, poly("x^2 * y", "x y"), max_order=8)


def test_analysis_of_the_cross_cap_augmentation():
    core, opsu = cusp_family(3)
    aug = analyze_augmentation(core, opsu, poly("z^3", "z"))
    assert aug.result.display() == "(y^2, y*z^3 + y^3, z)"
    assert [str(p) for p in aug.tau_basis] == ["z", "1"]
    assert [tuple(str(p) for p in f) for f in aug.gamma_basis] == [("0", "y")]
    assert (aug.tau, aug.f_codim) == (2, 1)
    assert aug.codim_report.value == 2
    assert aug.codim_report.exact


def test_gamma_basis_starts_with_the_unfolding_speed():
    core, opsu = cusp_family(5)
    aug = analyze_augmentation(core, opsu, poly("z^2", "z"))
    assert [tuple(str(p) for p in f) for f in aug.gamma_basis] == [
        ("0", "y"),
        ("0", "y^3"),
    ]
    assert aug.codim_report.value == 2


def test_analysis_rejects_stable_cores():
    imm = germ("y; y^2", "y")
    opsu = Opsu(unfolding("y; y^2; l", "y", "l"), "asserted")
    with pytest.raises(HypothesesUnmet):
        analyze_augmentation(imm, opsu, poly("z^2", "z"))


def test_analysis_rejects_vanishing_speeds():
    core = germ("y^2; y^3", "y")
    # The speed (0, y^2) is a pullback of a target coordinate, so it dies
    # in the normal space; "asserted" skips the stability gate on purpose.
    opsu = Opsu(unfolding("y^2; y^3 + y^2*l; l", "y", "l"), "asserted")
    with pytest.raises(HypothesesUnmet):
        analyze_augmentation(core, opsu, poly("z^2", "z"))


def test_versal_unfolding_of_the_cross_cap_augmentation():
    core, opsu = cusp_family(3)
    aug = analyze_augmentation(core, opsu, poly("z^3", "z"))
    vers = build_versal(aug)
    assert vers.parameter_names == ("l1_1", "l2_1")
    assert vers.display() == (
        "(y^2, y*z^3 + y^3 + y*z*l1_1 + y*l2_1, z, l1_1, l2_1)"
    )
    assert vers.base() == aug.result
    assert verify_versal(aug, vers)


def test_versal_unfolding_of_the_fifth_power_augmentations():
    core, opsu = cusp_family(5)
    b2 = analyze_augmentation(core, opsu, poly("z^2", "z"))
    vb = build_versal(b2)
    assert vb.parameter_names == ("l1_1", "l1_2")
    assert vb.display() == (
        "(y^2, y^5 + y^3*l1_2 + y*z^2 + y*l1_1, z, l1_1, l1_2)"
    )
    assert verify_versal(b2, vb)

    f4 = analyze_augmentation(core, opsu, poly("z^3", "z"))
    v4 = build_versal(f4)
    assert v4.parameter_names == ("l1_1", "l1_2", "l2_1", "l2_2")
    assert verify_versal(f4, v4)


@pytest.mark.parametrize("name", ["l1_1", "l1_2", "l2_1", "l2_2"])
def test_every_versal_parameter_is_needed(name):
    core, opsu = cusp_family(5)
    aug = analyze_augmentation(core, opsu, poly("z^3", "z"))
    smaller = drop_parameter(build_versal(aug), name)
    assert not is_versal(smaller).versal


def test_versal_parameter_names_avoid_collisions():
    core, opsu = cusp_family(3)
    aug = analyze_augmentation(core, opsu, poly("l1_1^2", "l1_1"))
    vers = build_versal(aug)
    assert vers.parameter_names == ("ll1_1",)


def test_versal_construction_refuses_lower_bounds():
    core, opsu = cusp_family(3)
    g = poly("z^4 + z^2*w^2 + w^7", "z w")
    aug = analyze_augmentation(core, opsu, g)
    assert not aug.codim_report.exact
    with pytest.raises(HypothesesUnmet):
        build_versal(aug)
    # the same augmentation builds fine once the hypothesis is asserted
    asserted = analyze_augmentation(core, opsu, g, SubstantialFlag(True))
    vers = build_versal(asserted)
    assert vers.m == 11


def test_verify_versal_rejects_foreign_unfoldings():
    core, opsu = cusp_family(3)
    aug = analyze_augmentation(core, opsu, poly("z^3", "z"))
    other = analyze_augmentation(core, opsu, poly("z^2", "z"))
    with pytest.raises(NotAnUnfoldingOf):
        verify_versal(aug, build_versal(other))


def test_verify_versal_counts_parameters():
    core, opsu = cusp_family(3)
    aug = analyze_augmentation(core, opsu, poly("z^3", "z"))
    vers = build_versal(aug)
    padded_ctx = vers.ctx.extend(("c",), "parameter")
    comps = tuple(c.embed(padded_ctx) for c in vers.components)
    padded = Unfolding(padded_ctx, comps + (Polynomial.variable(padded_ctx, "c"),))
    assert is_versal(padded).versal
    assert not verify_versal(aug, padded)


def test_lifted_fields_pair_tjurina_monomials_with_normal_fields():
    core, opsu = cusp_family(5)
    aug = analyze_augmentation(core, opsu, poly("z^3", "z"))
    fields = lifted_fields(aug)
    assert [tuple(str(p) for p in f) for f in fields] == [
        ("0", "y*z", "0"),
        ("0", "y^3*z", "0"),
        ("0", "y", "0"),
        ("0", "y^3", "0"),
    ]


def test_lifted_fields_are_nonzero_and_independent():
    core, opsu = cusp_family(5)
    for expr, count in [("z^2", 2), ("z^3", 4)]:
        aug = analyze_augmentation(core, opsu, poly(expr, "z"))
        rep = check_lifted_fields(aug)
        assert rep.count == count
        assert all(rep.nonzero)
        assert rep.rank == count
        assert rep.independent
        assert rep.ok
