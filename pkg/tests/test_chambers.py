import json

import pytest
from hypothesis import given

from su3mult import chambers as ch
from su3mult.bz import eval_forms
from su3mult.multiplicity import triple_multiplicity

from strategies import cone_points


def test_ray_generators():
    rays = ch.ray_generators()
    assert list(rays) == list(ch.RAY_NAMES)
    assert rays["STAR"] == (1, 1, 1, 1, 1, 1)
    assert rays["RT"] == (1, 0, 1, 0, 1, 0)
    assert rays["LT"] == (0, 1, 0, 1, 0, 1)
    assert ch.display_name("LT") == "◁" and ch.display_name("C1") == "C1"


def test_each_ray_fails_only_its_condition():
    for name, r in ch.RAYS.items():
        assert [k for k, ok in ch.conditions(r).items() if not ok] == [name]


def test_ray_relations():
    def total(names):
        return tuple(sum(ch.RAYS[k][i] for k in names) for i in range(6))
    star = ch.RAYS["STAR"]
    assert total(["C1", "C2", "C3"]) == total(["D1", "D3", "D5"]) == total(["LT", "RT"]) == star


def test_holds_and_conditions_outside_cone():
    assert ch.holds("C1", (0,) * 6)
    with pytest.raises(KeyError):
        ch.holds("D2", (0,) * 6)
    with pytest.raises(ValueError):
        ch.conditions((3, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("t,absent", [
    ((1, 1, 1, 1, 1, 1), {"STAR"}),
    ((0,) * 6, set()),
    ((1, 1, 1, 2, 2, 1), {"C1", "STAR"}),
])
def test_locate_examples(t, absent):
    assert ch.locate(t).absent == absent


def test_chamber_decoding():
    assert ch.decode_chamber(1, 1) == ("C1", "D1", "LT")
    assert [ch.decode_chamber(1, j)[1] for j in range(1, 7)] == ["D1", "D5", "D3", "D1", "D5", "D3"]
    assert ch.chamber_cell(1, 1).bitmask == "011011011"
    with pytest.raises(ValueError):
        ch.decode_chamber(0, 1)


def test_chambers_distinct_and_maximal():
    cells = [c for _, _, c in ch.chambers()]
    assert len(set(cells)) == 18
    assert set(cells) == {c for c in ch.cells() if c.dim == 6}


def test_cell_validation_and_roundtrip():
    with pytest.raises(ValueError):
        ch.Cell.from_names(["C1", "C2", "C3"])
    with pytest.raises(ValueError):
        ch.Cell.from_names(["LT", "RT"])
    with pytest.raises(ValueError):
        ch.Cell.from_names(["X"])
    with pytest.raises(ValueError):
        ch.Cell.from_bitmask("0101")
    c = ch.Cell.from_names(["C3", "D3", "LT"])
    assert ch.Cell.from_bitmask(c.bitmask) == c
    d = json.loads(c.to_json())
    assert d == {"absent": ["C3", "D3", "LT"], "dim": 3, "bitmask": "001010100"}
    assert c.defining == ("C1", "C2", "D1", "D5", "RT", "STAR")


def test_cells_order_and_count():
    cells = ch.cells()
    assert len(cells) == 294
    assert cells[0].bitmask == "000000000"
    assert [c.dim for c in cells] == sorted(c.dim for c in cells)
    assert ch.f_vector() == [1, 9, 35, 75, 93, 63, 18]


def test_every_cell_is_realized():
    for cell in ch.cells():
        assert ch.locate(cell.interior_point()) == cell


def test_face_relation():
    zero = ch.Cell(frozenset())
    chamber = ch.chamber_cell(2, 3)
    assert ch.face_relation(zero, chamber)
    assert not ch.face_relation(chamber, zero)
    ray = ch.Cell(frozenset({chamber.rays[0]}))
    assert ch.face_relation(ray, chamber)


@given(cone_points)
def test_locate_consistent_with_chambers(t):
    cell = ch.locate(t)
    owners = ch.containing_chambers(t)
    assert owners
    for i, j in owners:
        assert ch.face_relation(cell, ch.chamber_cell(i, j))
    fa = eval_forms(t)
    assert triple_multiplicity(t) == int(fa.min_f - fa.max_g) + 1


def test_render_diagram():
    zero = ch.render_diagram(ch.Cell(frozenset()))
    assert zero.splitlines()[-1] == "000000000"
    assert "C1" not in zero and "*" not in zero
    star = ch.render_diagram(ch.Cell(frozenset({"STAR"})))
    assert star.splitlines()[-1] == "000000001" and "*" in star
    c11 = ch.render_diagram(ch.chamber_cell(1, 1))
    assert c11.splitlines()[-1] == "011011011"
    assert ">" in c11 and "<" not in c11
    assert len({len(x) for x in c11.splitlines()[:-1]}) == 1
