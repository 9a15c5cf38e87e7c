"""
The chamber complex of the SU(3) triple multiplicities.

A cell is identified by the set of conditions that fail on it, which is also
the set of rays it contains; its dimension is the size of that set.  The nine
conditions, evaluated with exact arithmetic on 3*f and 3*g:

    C1, C2, C3   min f = f_1, f_2, f_3
    D1, D3, D5   max g = max(g_1, g_4), max(g_3, g_6), max(g_5, g_2)
    LT           max g = max(g_1, g_3, g_5)
    RT           max g = max(g_2, g_4, g_6)
    STAR         min f = max g

Each ray generator r_X fails exactly the condition X.
"""

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .bz import forms3
from .lattice import TripleLabel

RAY_NAMES = ("C1", "C2", "C3", "D1", "D3", "D5", "LT", "RT", "STAR")
SYMBOLS = {"LT": "◁", "RT": "▷", "STAR": "★"}
C_SET = frozenset({"C1", "C2", "C3"})
D_SET = frozenset({"D1", "D3", "D5"})
T_SET = frozenset({"LT", "RT"})

RAYS: dict[str, TripleLabel] = {
    "C1": TripleLabel(0, 0, 0, 1, 1, 0),
    "C2": TripleLabel(1, 0, 0, 0, 0, 1),
    "C3": TripleLabel(0, 1, 1, 0, 0, 0),
    "D1": TripleLabel(1, 0, 0, 1, 0, 0),
    "D3": TripleLabel(0, 0, 1, 0, 0, 1),
    "D5": TripleLabel(0, 1, 0, 0, 1, 0),
    "LT": TripleLabel(0, 1, 0, 1, 0, 1),
    "RT": TripleLabel(1, 0, 1, 0, 1, 0),
    "STAR": TripleLabel(1, 1, 1, 1, 1, 1),
}


def ray_generators() -> dict[str, TripleLabel]:
    return dict(RAYS)


def display_name(name: str) -> str:
    return SYMBOLS.get(name, name)


def in_cone(t: Sequence[int]) -> bool:
    f3, g3 = forms3(t)
    return min(f3) >= max(g3)


def conditions(t: Sequence[int]) -> dict[str, bool]:
    """Truth value of every condition at t (t must be in the cone)."""
    f3, g3 = forms3(t)
    mf, mg = min(f3), max(g3)
    if mf < mg:
        raise ValueError(f"{tuple(t)} is outside the cone")
    g1, g2, g3_, g4, g5, g6 = g3
    return {
        "C1": f3[0] == mf,
        "C2": f3[1] == mf,
        "C3": f3[2] == mf,
        "D1": max(g1, g4) == mg,
        "D3": max(g3_, g6) == mg,
        "D5": max(g5, g2) == mg,
        "LT": max(g1, g3_, g5) == mg,
        "RT": max(g2, g4, g6) == mg,
        "STAR": mf == mg,
    }


def holds(cond: str, t: Sequence[int]) -> bool:
    if cond not in RAY_NAMES:
        raise KeyError(cond)
    return conditions(t)[cond]


def _order(names: Iterable[str]) -> tuple[str, ...]:
    names = set(names)
    return tuple(n for n in RAY_NAMES if n in names)


@dataclass(frozen=True)
class Cell:
    """A cell, stored as the set of conditions failing on it (= rays it contains)."""

    absent: frozenset

    def __post_init__(self):
        absent = frozenset(self.absent)
        object.__setattr__(self, "absent", absent)
        unknown = absent - set(RAY_NAMES)
        if unknown:
            raise ValueError(f"unknown conditions {sorted(unknown)}")
        for group in (C_SET, D_SET, T_SET):
            if group <= absent:
                raise ValueError(f"{sorted(group)} cannot all fail on a cell")

    @property
    def dim(self) -> int:
        return len(self.absent)

    @property
    def rays(self) -> tuple[str, ...]:
        return _order(self.absent)

    @property
    def defining(self) -> tuple[str, ...]:
        return _order(set(RAY_NAMES) - self.absent)

    @property
    def bitmask(self) -> str:
        return "".join("1" if n in self.absent else "0" for n in RAY_NAMES)

    @classmethod
    def from_bitmask(cls, mask: str) -> "Cell":
        mask = mask.strip()
        if len(mask) != 9 or set(mask) - {"0", "1"}:
            raise ValueError(f"bad cell bitmask {mask!r}")
        return cls(frozenset(n for n, b in zip(RAY_NAMES, mask) if b == "1"))

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "Cell":
        return cls(frozenset(names))

    def to_dict(self) -> dict:
        return {"absent": list(self.rays), "dim": self.dim, "bitmask": self.bitmask}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def interior_point(self) -> TripleLabel:
        """Sum of the contained ray generators; lies in the relative interior."""
        total = [0] * 6
        for name in self.absent:
            total = [a + b for a, b in zip(total, RAYS[name])]
        return TripleLabel(*total)


def locate(t: Sequence[int]) -> Cell:
    """The unique open cell containing t."""
    truth = conditions(t)
    return Cell(frozenset(n for n, ok in truth.items() if not ok))


def decode_chamber(i: int, j: int) -> tuple[str, str, str]:
    """Defining conditions (C_i, D_j', omega_j) of C(i, j).

    For odd j, max g = g_j forces D_j and the odd-index condition LT.  For even
    j it forces D_{j+3} (indices mod 6 in {1, 3, 5}) and RT.
    """
    if not (1 <= i <= 3 and 1 <= j <= 6):
        raise ValueError(f"no chamber ({i}, {j})")
    if j % 2:
        return f"C{i}", f"D{j}", "LT"
    return f"C{i}", f"D{(j + 3 - 1) % 6 + 1}", "RT"


def chamber_cell(i: int, j: int) -> Cell:
    return Cell(frozenset(RAY_NAMES) - set(decode_chamber(i, j)))


def chambers() -> list[tuple[int, int, Cell]]:
    return [(i, j, chamber_cell(i, j)) for i in range(1, 4) for j in range(1, 7)]


def chamber_contains(i: int, j: int, t: Sequence[int]) -> bool:
    """Closure membership: t in the cone with f_i = min f and g_j = max g."""
    f3, g3 = forms3(t)
    return min(f3) >= max(g3) and f3[i - 1] == min(f3) and g3[j - 1] == max(g3)


def containing_chambers(t: Sequence[int]) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, 4) for j in range(1, 7) if chamber_contains(i, j, t)]


def cells() -> list[Cell]:
    """All cells, ordered by dimension and then by bitmask (descending)."""
    out = []
    for k in range(len(RAY_NAMES) + 1):
        for names in combinations(RAY_NAMES, k):
            s = frozenset(names)
            if C_SET <= s or D_SET <= s or T_SET <= s:
                continue
            out.append(Cell(s))
    return sorted(out, key=lambda c: (c.dim, [-int(b) for b in c.bitmask]))


def f_vector() -> list[int]:
    counts = [0] * 7
    for c in cells():
        counts[c.dim] += 1
    return counts


def face_relation(a: Cell, b: Cell) -> bool:
    """True iff a is a face of b."""
    return a.absent <= b.absent


def exterior_rays(cell: Cell) -> list[TripleLabel]:
    return [RAYS[n] for n in cell.rays if n != "STAR"]


# Hexagon C1, D1, C2, D3, C3, D5 clockwise from lower right; STAR at the
# center, LT on the left and RT on the right.  Absent items print as dots.
_LAYOUT = [
    "     {C2}      ",
    " {D3}       {D1} ",
    " {LT}    {STAR}    {RT} ",
    " {C3}       {C1} ",
    "     {D5}      ",
]
_GLYPH = {"LT": "<", "RT": ">", "STAR": "*"}


def render_diagram(cell: Cell) -> str:
    items = {}
    for name in RAY_NAMES:
        glyph = _GLYPH.get(name, name)
        items[name] = glyph if name in cell.absent else "." * len(glyph)
    lines = [row.format(**items) for row in _LAYOUT]
    width = max(len(x) for x in lines)
    lines = [x.ljust(width) for x in lines]
    return "\n".join(lines + [cell.bitmask])
