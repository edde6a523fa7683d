"""Curve tables, regularity, and feasibility obstructions.

Oracles: section counts recombine with ideal counts to the ambient
count; the genus spectrum on the quadric surface is brute-forced over
bidegrees; the nonspecialty threshold is rederived by direct scan.
"""

import pytest

from quadliaison import (
    P2,
    P3,
    P4,
    QUADRIC3,
    CohomTable,
    CurveClass,
    NegativeDimension,
    acm_embedding_obstruction,
    ambient_table,
    full_ideal_table,
    ideal_h0,
    ideal_h0_table,
    klein_parity_check,
    nonspecial_threshold,
    parse_window,
    plane_genus,
    quadric_surface_genus_spectrum,
    regularity,
    render_value_csv,
    render_value_row,
    rr_chi,
    section_table,
)

C84_P4 = CurveClass(P4, 8, 4)
C84_Q = CurveClass(QUADRIC3, 8, 4)
C40_Q = CurveClass(QUADRIC3, 4, 0)


def brute_spectrum(degree: int) -> set[int]:
    out = set()
    for a in range(1, degree + 1):
        for b in range(1, degree + 1):
            if a + b == degree:
                out.add((a - 1) * (b - 1))
    return out


def brute_threshold(degree: int, genus: int) -> int:
    n = 1
    while not n * degree > 2 * genus - 2:
        n += 1
    return n


def test_rr_chi():
    assert rr_chi(8, 4, 1) == 5
    assert rr_chi(4, 0, 1) == 5
    for d, g in ((8, 4), (4, 0), (3, 1)):
        assert rr_chi(d, g, 0) == 1 - g


def test_section_tables():
    assert list(section_table(C84_P4, (0, 4)).values()) == [1, 5, 13, 21, 29]
    assert list(section_table(C40_Q, (0, 6)).values()) == [1, 5, 9, 13, 17, 21, 25]
    assert section_table(C84_Q, (-3, -1)) == {-3: 0, -2: 0, -1: 0}
    with pytest.raises(ValueError):
        section_table(CurveClass(P4, 8, 4, acm=False), (0, 4))


def test_ambient_tables():
    assert list(ambient_table(P4, (0, 4)).values()) == [1, 5, 15, 35, 70]
    assert list(ambient_table(QUADRIC3, (0, 6)).values()) == [
        1, 5, 14, 30, 55, 91, 140,
    ]


def test_ideal_tables():
    assert list(ideal_h0_table(C84_P4, (0, 4)).values()) == [0, 0, 2, 14, 41]
    assert list(ideal_h0_table(C84_Q, (0, 6)).values()) == [0, 0, 1, 9, 26, 54, 95]
    assert list(ideal_h0_table(C40_Q, (0, 6)).values()) == [0, 0, 5, 17, 38, 70, 115]


def test_ideal_plus_sections_recombine():
    for curve in (C84_P4, C84_Q, C40_Q, CurveClass(P3, 3, 0)):
        sections = section_table(curve, (-1, 8))
        ideal = ideal_h0_table(curve, (-1, 8))
        for n in range(-1, 9):
            assert ideal[n] + sections[n] == curve.ambient.h0(n)


def test_p3_curve_infeasible():
    with pytest.raises(NegativeDimension) as info:
        ideal_h0_table(CurveClass(P3, 8, 4), (0, 4))
    assert info.value.twist == 1
    assert info.value.value == 4 - 5


def test_full_table_cells():
    table = full_ideal_table(C84_P4)
    assert table.cell(2, 1) == 0
    assert table.cell(3, 0) == 0
    # h1(O_C) = g for a connected curve: chi(O_C) = 1 - g with h0 = 1
    assert table.cell(2, 0) == 4
    assert table.cell(2, -1) == 4 - 1 + 8
    lo, hi = table.window
    assert all(table.cell(1, n) == 0 for n in range(lo, hi + 1))
    assert table.notes and "integral" in table.notes[0]


def test_full_table_quadric_h3_row():
    table = full_ideal_table(C40_Q, (-4, 2))
    # h3(I(n)) = h0(O_Q(-3-n)) through the dualizing twist -3
    assert table.cell(3, -4) == 5
    assert table.cell(3, -3) == 1
    assert table.cell(3, -2) == 0
    table_p3 = full_ideal_table(CurveClass(P3, 3, 0), (-5, 1))
    assert table_p3.cell(3, -5) == 4
    assert table_p3.cell(3, -4) == 1
    with pytest.raises(ValueError):
        full_ideal_table(CurveClass(P2, 3, 1))


def test_unknown_cells_marked():
    # d=2, g=3: twists 1 and 2 satisfy n*d <= 2g-2, so h1(O_C(n)) is open
    table = full_ideal_table(CurveClass(P3, 2, 3), (0, 4))
    assert table.cell(2, 1) is None
    assert table.cell(2, 2) is None
    assert table.cell(2, 3) == 0
    assert "?" in table.render_grid()
    assert "2,1,?" in table.render_csv()


def test_regularity_paper_curves():
    report = regularity(full_ideal_table(C84_P4))
    assert report.regularity == 3
    assert report.witness == ((1, 2), (2, 1), (3, 0))
    assert regularity(full_ideal_table(C40_Q)).regularity == 2
    # the quadric case needs the n = -1 guard column for its h3 cell
    assert (3, -1) in regularity(full_ideal_table(C40_Q)).witness


def test_regularity_degenerate_and_unknown():
    zero = CohomTable((2, 5), {(i, n): 0 for i in range(4) for n in range(2, 6)})
    assert regularity(zero).regularity == 2
    # unknown diagonals postpone certification
    report = regularity(full_ideal_table(CurveClass(P3, 2, 3), (0, 6)))
    assert report.regularity == 5
    all_unknown = CohomTable(
        (0, 6), {(i, n): None for i in range(4) for n in range(7)}
    )
    assert regularity(all_unknown).regularity is None


def test_regularity_propagation():
    for curve in (C84_P4, C84_Q, C40_Q):
        table = full_ideal_table(curve)
        report = regularity(table)
        lo, hi = table.window
        for m in range(report.regularity, hi + 2):
            for i in (1, 2, 3):
                if lo <= m - i <= hi:
                    assert table.cell(i, m - i) == 0, (curve, m, i)


def test_obstructions():
    assert acm_embedding_obstruction(8, 4, P3).feasible is False
    assert acm_embedding_obstruction(8, 4, P3).witness_twist == 1
    assert acm_embedding_obstruction(8, 4, P4).feasible is True
    assert acm_embedding_obstruction(1, 0, P2).feasible is True
    # matches the table failure exactly, and the linear-forms implication
    for d in range(1, 11):
        for g in range(0, 11):
            for ambient in (P3, P4, QUADRIC3):
                verdict = acm_embedding_obstruction(d, g, ambient)
                curve = CurveClass(ambient, d, g)
                try:
                    ideal_h0_table(curve, (0, 2 * d))
                    table_feasible = True
                except NegativeDimension as exc:
                    table_feasible = False
                    assert exc.twist == verdict.witness_twist
                assert verdict.feasible == table_feasible
                if not ambient.is_quadric and ambient.h0(1) < rr_chi(d, g, 1):
                    assert not verdict.feasible


def test_nonspecial_threshold():
    assert nonspecial_threshold(8, 4) == 1
    assert nonspecial_threshold(2, 3) == 3 == brute_threshold(2, 3)
    for d in range(1, 8):
        assert nonspecial_threshold(d, 0) == 1
        for g in range(0, 8):
            assert nonspecial_threshold(d, g) == brute_threshold(d, g)


def test_plane_genus():
    assert plane_genus(8) == 21
    assert plane_genus(1) == 0
    assert plane_genus(3) == 1


def test_quadric_surface_genus_spectrum():
    assert quadric_surface_genus_spectrum(8) == {0, 5, 8, 9}
    assert 4 not in quadric_surface_genus_spectrum(8)
    assert quadric_surface_genus_spectrum(2) == {0}
    assert quadric_surface_genus_spectrum(4) == {0, 1}
    for d in range(1, 21):
        assert quadric_surface_genus_spectrum(d) == brute_spectrum(d)


def test_klein_parity():
    assert klein_parity_check(4)
    assert klein_parity_check(2)
    assert not klein_parity_check(3)


def test_row_renderers():
    row = ideal_h0_table(C84_Q, (0, 6))
    assert render_value_row(row) == (
        " n:  0  1  2  3   4   5   6\n"
        "h0:  0  0  1  9  26  54  95\n"
    )
    assert render_value_csv(row) == (
        "n,value\n0,0\n1,0\n2,1\n3,9\n4,26\n5,54\n6,95\n"
    )


def test_grid_renderer():
    grid = full_ideal_table(C84_P4, (-1, 4)).render_grid()
    assert grid == (
        " n:  -1  0  1  2   3   4\n"
        "h3:   0  0  0  0   0   0\n"
        "h2:  11  4  0  0   0   0\n"
        "h1:   0  0  0  0   0   0\n"
        "h0:   0  0  0  2  14  41\n"
    )


def test_parse_window():
    assert parse_window("-1:8") == (-1, 8)
    assert parse_window("0:6") == (0, 6)
    for bad in ("5", "3:1", "a:b", "1:2:3"):
        with pytest.raises(ValueError):
            parse_window(bad)
