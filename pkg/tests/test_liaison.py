"""Linkage arithmetic and mapping-cone transport.

The genus-drop formula is cross-checked by its sign symmetry and by the
involution property; the twisted-cubic example is rederived from the
formula with an independently computed total degree.
"""

import random

import pytest

from quadliaison import (
    QUADRIC3,
    CILinkage,
    CurveClass,
    MappingConeInconsistent,
    ResidualNegativeDegree,
    ResidualNegativeGenus,
    ResolutionFlavor,
    ResolutionTriple,
    cancel_matched_pairs,
    ci_residual,
    divisor_surface_degree,
    line_bundle,
    mapping_cone_e_from_n,
    mapping_cone_n_from_e,
    quadric_linkage,
    resolution_consistency_check,
    spinor,
)

C84 = CurveClass(QUADRIC3, 8, 4)
C40 = CurveClass(QUADRIC3, 4, 0)

ETYPE_84 = ResolutionTriple(
    spinor(-2, 2), line_bundle(-2) + line_bundle(-3, 4), C84, ResolutionFlavor.E_TYPE
)
ETYPE_40 = ResolutionTriple(
    spinor(-1, 2), line_bundle(-2, 5), C40, ResolutionFlavor.E_TYPE
)


def test_linkage_validation():
    assert quadric_linkage(2, 3).degrees == (2, 2, 3)
    assert quadric_linkage(2, 3).total_degree == 12
    assert divisor_surface_degree(2) == 4
    with pytest.raises(ValueError):
        CILinkage(4, (2, 2))
    with pytest.raises(ValueError):
        CILinkage(3, (2, 0))
    with pytest.raises(ValueError):
        CILinkage(2, (2,))


def test_ci_residual_paper_case():
    assert ci_residual(8, 4, quadric_linkage(2, 3)) == (4, 0)
    assert ci_residual(4, 0, quadric_linkage(2, 3)) == (8, 4)
    # genus drop is (sum - dim - 1)(d - d')/2 = (7 - 5)(8 - 4)/2 = 4
    assert 4 - 0 == (7 - 5) * (8 - 4) // 2


def test_ci_residual_twisted_cubic():
    linkage = CILinkage(3, (2, 2))
    assert linkage.total_degree == 4
    drop = (2 + 2 - 3 - 1) * (3 - 1) // 2
    assert drop == 0
    assert ci_residual(3, 0, linkage) == (1, 0)


def test_ci_residual_errors():
    with pytest.raises(ResidualNegativeDegree):
        ci_residual(8, 4, CILinkage(3, (2, 2)))
    with pytest.raises(ResidualNegativeDegree):
        # total degree equals the curve degree: residual would be empty
        ci_residual(8, 4, CILinkage(3, (2, 4)))
    with pytest.raises(ResidualNegativeGenus):
        ci_residual(7, 0, quadric_linkage(2, 3))


def test_ci_residual_involution_and_sign_symmetry():
    rng = random.Random(84)
    seen = 0
    while seen < 300:
        dim = rng.choice((3, 4, 5))
        degrees = tuple(rng.randint(1, 5) for _ in range(dim - 1))
        linkage = CILinkage(dim, degrees)
        d = rng.randint(1, max(1, linkage.total_degree - 1))
        g = rng.randint(0, 12)
        try:
            d2, g2 = ci_residual(d, g, linkage)
        except (ResidualNegativeDegree, ResidualNegativeGenus):
            continue
        seen += 1
        assert ci_residual(d2, g2, linkage) == (d, g)
        assert (g - g2) == -(g2 - g)
        drop_twice = (sum(degrees) - dim - 1) * (d - d2)
        assert drop_twice % 2 == 0
        assert g - g2 == drop_twice // 2


def test_resolution_render():
    assert ETYPE_84.render() == "0 -> 2*E0(-2) -> O(-2) + 4*O(-3) -> I_C -> 0"
    assert ETYPE_84.rank_diff == 1
    assert ETYPE_84.c1_diff == 0


def test_consistency_pass_for_published_resolutions():
    for triple in (ETYPE_84, ETYPE_40):
        report = resolution_consistency_check(triple, (0, 6))
        assert report.ok
        assert len(report.cells) == 7
        assert report.rank_ok and report.c1_ok
        assert report.first_failure() is None
        assert "PASS" in report.render_text()


def test_consistency_fail_for_printed_ntype_twists():
    printed = ResolutionTriple(
        line_bundle(-5, 5),
        line_bundle(-4) + line_bundle(-3) + spinor(-3, 2),
        C84,
        ResolutionFlavor.N_TYPE,
    )
    # rank and determinant balance, so only the cell audit can object
    assert printed.rank_diff == 1 and printed.c1_diff == 0
    report = resolution_consistency_check(printed, (0, 6))
    assert not report.ok
    first = report.first_failure()
    assert (first.twist, first.lhs, first.rhs) == (2, 0, 1)
    assert "FAIL at n=2: 0 != 1" in report.render_text()
    assert "2,0,1,false" in report.render_csv()


def test_consistency_csv():
    report = resolution_consistency_check(ETYPE_84, (0, 2))
    assert report.render_csv() == "n,lhs,rhs,pass\n0,0,0,true\n1,0,0,true\n2,1,1,true\n"


def test_mapping_cone_n_from_e():
    derived = mapping_cone_n_from_e(ETYPE_40, (2, 3))
    assert derived.render() == "0 -> 5*O(-3) -> O(-2) + O(-3) + 2*E0(-1) -> I_C -> 0"
    assert derived.flavor is ResolutionFlavor.N_TYPE
    assert derived.curve == C84
    assert derived.kernel.rank_c1() == (5, -15)
    assert derived.middle.rank_c1() == (6, -15)
    assert resolution_consistency_check(derived).ok


def test_mapping_cone_roundtrip():
    derived = mapping_cone_n_from_e(ETYPE_40, (2, 3))
    assert mapping_cone_e_from_n(derived, (2, 3)) == ETYPE_40
    again = mapping_cone_n_from_e(mapping_cone_e_from_n(derived, (2, 3)), (2, 3))
    assert again == derived


def test_mapping_cone_other_linkages():
    # (2,2) self-links (4,0); (2,4) self-links (8,4)
    for triple, pairs in (
        (ETYPE_40, ((2, 3), (2, 2))),
        (ETYPE_84, ((2, 3), (2, 4))),
    ):
        for pair in pairs:
            derived = mapping_cone_n_from_e(triple, pair)
            assert resolution_consistency_check(derived).ok
            assert mapping_cone_e_from_n(derived, pair) == triple


def test_mapping_cone_detects_impossible_linkage():
    # {2,3,3} would link (4,0) to a (14,15) curve, whose forced section
    # counts (five independent hyperplanes through a degree-14 curve) are
    # absurd; the cell audit catches this even though ci_residual cannot.
    assert ci_residual(4, 0, quadric_linkage(3, 3)) == (14, 15)
    with pytest.raises(MappingConeInconsistent) as info:
        mapping_cone_n_from_e(ETYPE_40, (3, 3))
    assert info.value.twist == 1
    assert (info.value.lhs, info.value.rhs) == (0, 5)


def test_mapping_cone_flavor_and_ambient_guards():
    with pytest.raises(ValueError):
        mapping_cone_e_from_n(ETYPE_40, (2, 3))
    derived = mapping_cone_n_from_e(ETYPE_40, (2, 3))
    with pytest.raises(ValueError):
        mapping_cone_n_from_e(derived, (2, 3))


def test_mapping_cone_missing_koszul_summands():
    empty_kernel = ResolutionTriple(
        line_bundle(0, 0), line_bundle(0), C40, ResolutionFlavor.N_TYPE
    )
    with pytest.raises(ValueError):
        mapping_cone_e_from_n(empty_kernel, (2, 3))


def test_mapping_cone_inconsistent_input():
    wrong = ResolutionTriple(
        spinor(-3, 2), line_bundle(-2, 5), C40, ResolutionFlavor.E_TYPE
    )
    with pytest.raises(MappingConeInconsistent) as info:
        mapping_cone_n_from_e(wrong, (2, 3))
    assert isinstance(info.value.twist, int)


def test_cancel_matched_pairs():
    derived = mapping_cone_n_from_e(ETYPE_40, (2, 3))
    reduced, notes = cancel_matched_pairs(derived)
    assert reduced.kernel.render() == "4*O(-3)"
    assert reduced.middle.render() == "O(-2) + 2*E0(-1)"
    assert notes == ("removed 1 matched O(-3) from both sides",)
    assert resolution_consistency_check(reduced).ok
    untouched, no_notes = cancel_matched_pairs(ETYPE_84)
    assert untouched is ETYPE_84 and no_notes == ()
