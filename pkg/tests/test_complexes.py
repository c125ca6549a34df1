from fractions import Fraction

import pytest

from afflat.complexes import Triangulation, blow_up
from afflat.core import farey_mediant, is_regular
from afflat.errors import InputError

F = Fraction


def unit_triangle():
    return ((F(0), F(0)), (F(1), F(0)), (F(0), F(1)))


def test_maximal_cells_absorb_faces():
    t = Triangulation([unit_triangle(), (unit_triangle()[0], unit_triangle()[1])])
    assert t.maximal == (tuple(sorted(unit_triangle())),)


def test_simplexes_closed_under_faces():
    t = Triangulation([unit_triangle()])
    simps = t.simplexes()
    assert len(simps) == 7  # 3 vertices + 3 edges + 1 triangle


def test_valid_complex_accepts_proper_gluing():
    a = ((F(0),), (F(1),))
    b = ((F(1),), (F(2),))
    assert Triangulation([a, b]).is_valid_complex()


def test_valid_complex_rejects_overlap():
    a = ((F(0),), (F(2),))
    b = ((F(1),), (F(3),))
    assert not Triangulation([a, b]).is_valid_complex()


def test_valid_complex_rejects_mid_edge_vertex():
    a = unit_triangle()
    b = ((F(1, 2), F(0)), (F(1, 2), F(-1)), (F(1), F(-1)))
    assert not Triangulation([a, b]).is_valid_complex()


def test_blow_up_keeps_support_and_regularity():
    t = Triangulation([unit_triangle()])
    t2 = blow_up(t, unit_triangle())
    assert len(t2.maximal) == 3
    assert t2.is_valid_complex()
    med = farey_mediant(unit_triangle())
    for cell in t2.maximal:
        assert med in cell and is_regular(cell)
    # blowing up an edge of the new complex subdivides both adjacent cells
    edge = (med, (F(0), F(0)))
    t3 = blow_up(t2, edge)
    assert t3.is_valid_complex()
    assert all(is_regular(c) for c in t3.maximal)


def test_blow_up_rejects_non_member():
    t = Triangulation([unit_triangle()])
    with pytest.raises(InputError):
        blow_up(t, ((F(5), F(5)), (F(6), F(5))))
