from fractions import Fraction

import pytest
from hypothesis import given

from su3mult.bz import (
    BZLabelling,
    BZTriangle,
    bz_of,
    decompose,
    enumerate_fiber,
    eval_forms,
    fundamental_triangles,
    project,
    recompose,
    x_range,
)
from su3mult.chambers import RAYS

from strategies import coords, lattice_points


def test_eval_forms_examples():
    fa = eval_forms((1, 1, 1, 1, 1, 1))
    assert fa.omega == 0
    assert fa.f == (0, 0, 0)
    assert fa.g == (-1,) * 6
    fb = eval_forms((0, 0, 0, 1, 1, 0))
    assert fb.omega == 0 and fb.f == (0, -1, -1) and fb.g == (-1,) * 6
    fz = eval_forms((0,) * 6)
    assert set(fz.f + fz.g) == {0} and fz.omega == 0


def test_eval_forms_off_lattice_is_fractional():
    fa = eval_forms((1, 0, 0, 0, 0, 0))
    assert fa.omega == Fraction(1, 3)


@pytest.mark.parametrize("x,y,z", [
    (0, (0, 0, 0), (1,) * 6),
    (-1, (1, 1, 1), (0,) * 6),
])
def test_bz_of_examples(x, y, z):
    b = bz_of((1, 1, 1, 1, 1, 1), x)
    assert b.y == y and b.z == z


def test_bz_of_off_lattice():
    with pytest.raises(ValueError):
        bz_of((1, 0, 0, 0, 0, 0), 0)


def test_project_examples():
    assert project(BZLabelling((1, 0, 0), (0,) * 6)) == (0, 0, 0, 1, 1, 0)
    assert project(BZLabelling((0, 0, 0), (1, 0, 1, 0, 1, 0))) == (0, 1, 0, 1, 0, 1)
    assert project(BZLabelling((0, 0, 0), (0,) * 6)) == (0,) * 6


def test_hexagon_condition_enforced():
    with pytest.raises(ValueError):
        BZLabelling((0, 0, 0), (1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        BZTriangle((0, -1, 0), (0,) * 6)


def test_text_roundtrip():
    b = BZLabelling((1, 2, 3), (4, 2, 3, 5, 1, 4))
    assert BZLabelling.parse(b.text()) == b


@pytest.mark.parametrize("t,n", [
    ((1, 1, 1, 1, 1, 1), 2),
    ((0, 0, 0, 1, 1, 0), 1),
    ((1, 0, 0, 0, 0, 0), 0),
])
def test_enumerate_fiber_examples(t, n):
    for mode in ("scan", "exhaustive"):
        assert len(enumerate_fiber(t, mode)) == n


def test_enumerate_fiber_star_triangles():
    got = [b.labels() for b in enumerate_fiber((1, 1, 1, 1, 1, 1))]
    assert got == [(0, 0, 0) + (1,) * 6, (1, 1, 1) + (0,) * 6]


def test_enumerate_fiber_bad_mode():
    with pytest.raises(ValueError):
        enumerate_fiber((0,) * 6, "fast")


@given(coords)
def test_modes_agree_and_project_back(t):
    scan = enumerate_fiber(t, "scan")
    assert [b.labels() for b in scan] == [b.labels() for b in enumerate_fiber(t, "exhaustive")]
    assert all(project(b) == t for b in scan)
    assert len(scan) == len(x_range(t))


def test_fundamental_triangles_project_to_rays():
    for name, tri in fundamental_triangles().items():
        assert project(tri) == RAYS[name]
        assert [b.labels() for b in enumerate_fiber(RAYS[name])] == [tri.labels()]


def test_decompose_examples():
    fund = fundamental_triangles()
    c = decompose(fund["RT"])
    assert c["RT"] == 1 and sum(c.values()) == 1
    c = decompose(BZLabelling((1, 1, 1), (1,) * 6))
    assert all(c[k] == 1 for k in ("C1", "C2", "C3", "D1", "D3", "D5"))
    assert c["LT"] == c["RT"] == 0


def test_decompose_rational_and_negative():
    half = Fraction(1, 2)
    b = BZLabelling((half, 0, 0), (half, 0, half, 0, half, 0))
    c = decompose(b)
    assert recompose(c).labels() == b.labels()
    assert min(c.values()) >= 0
    with pytest.raises(ValueError):
        decompose(BZLabelling((-1, 0, 0), (0,) * 6))


@given(lattice_points)
def test_decompose_recompose(t):
    fiber = enumerate_fiber(t)
    for b in fiber:
        c = decompose(b)
        assert min(c.values()) >= 0
        assert c["LT"] == 0 or c["RT"] == 0
        assert recompose(c).labels() == b.labels()
