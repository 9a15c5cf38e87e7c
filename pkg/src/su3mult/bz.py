"""
Berenstein-Zelevinsky triangles for SU(3).

The BZ graph has corner vertices Y1, Y2, Y3 and hexagon vertices Z1..Z6.  A
labelling lies in the 7-dimensional BZ space when opposite hexagon sides have
equal sums, z1 - z4 = z5 - z2 = z3 - z6.  Its projection to a triple label is

    l1 = y2 + z4,   m1 = y3 + z6,   n1 = y1 + z2,
    l2 = y3 + z5,   m2 = y1 + z1,   n2 = y2 + z3.

Over a triple label t the BZ space is a line, parameterized by x = -y1:
y_i = f_i(t) - x and z_j = x - g_j(t), with the linear forms of `eval_forms`.
The forms carry omega(t)/3, so they are kept internally as 3*f and 3*g.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from .lattice import TripleLabel, in_lattice

FUNDAMENTAL_NAMES = ("C1", "C2", "C3", "D1", "D3", "D5", "LT", "RT")


def _omega3(t: Sequence[int]) -> int:
    l1, l2, m1, m2, n1, n2 = t
    return l1 + m1 + n1 - l2 - m2 - n2


def forms3(t: Sequence[int]) -> tuple[tuple[int, int, int], tuple[int, ...]]:
    """Integer vectors (3*f1, 3*f2, 3*f3) and (3*g1, ..., 3*g6)."""
    l1, l2, m1, m2, n1, n2 = t
    w = _omega3(t)
    f = (0, 3 * (l1 - m2) - w, 3 * (l2 - n1) + w)
    g = (
        -3 * m2,
        -3 * n1,
        3 * (l1 - m2 - n2) - w,
        -3 * m2 - w,
        -3 * n1 + w,
        3 * (l2 - m1 - n1) + w,
    )
    return f, g


@dataclass(frozen=True)
class FormsAt:
    """Values of the forms f_i, g_j and omega at one point, times 3."""

    f3: tuple[int, int, int]
    g3: tuple[int, ...]
    omega3: int

    @property
    def f(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 3) for v in self.f3)

    @property
    def g(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, 3) for v in self.g3)

    @property
    def omega(self) -> Fraction:
        return Fraction(self.omega3, 3)

    @property
    def min_f(self) -> Fraction:
        return Fraction(min(self.f3), 3)

    @property
    def max_g(self) -> Fraction:
        return Fraction(max(self.g3), 3)

    @property
    def in_cone(self) -> bool:
        """All 18 inequalities f_i >= g_j."""
        return min(self.f3) >= max(self.g3)


def eval_forms(t: Sequence[int]) -> FormsAt:
    f3, g3 = forms3(t)
    return FormsAt(f3, g3, _omega3(t))


@dataclass(frozen=True)
class BZLabelling:
    y: tuple[int, int, int]
    z: tuple[int, int, int, int, int, int]

    def __post_init__(self):
        y, z = tuple(self.y), tuple(self.z)
        if len(y) != 3 or len(z) != 6:
            raise ValueError("a BZ labelling has 3 y-labels and 6 z-labels")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)
        if not self.hexagon_ok:
            raise ValueError(f"hexagon condition fails for y={y}, z={z}")

    @property
    def hexagon_ok(self) -> bool:
        z1, z2, z3, z4, z5, z6 = self.z
        return z1 - z4 == z5 - z2 == z3 - z6

    @property
    def omega(self):
        return self.z[3] - self.z[0]

    @property
    def is_triangle(self) -> bool:
        return min(self.y) >= 0 and min(self.z) >= 0

    def labels(self) -> tuple:
        return self.y + self.z

    def __add__(self, other: "BZLabelling") -> "BZLabelling":
        return BZLabelling(
            tuple(a + b for a, b in zip(self.y, other.y)),
            tuple(a + b for a, b in zip(self.z, other.z)),
        )

    def scale(self, k) -> "BZLabelling":
        return BZLabelling(tuple(k * a for a in self.y), tuple(k * a for a in self.z))

    def text(self) -> str:
        return ",".join(map(str, self.y)) + "/" + ",".join(map(str, self.z))

    @classmethod
    def parse(cls, text: str) -> "BZLabelling":
        ys, zs = text.strip().split("/")
        return cls(tuple(int(v) for v in ys.split(",")), tuple(int(v) for v in zs.split(",")))


class BZTriangle(BZLabelling):
    """A BZ labelling with nonnegative integer labels."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_triangle:
            raise ValueError(f"negative label in {self.text()}")


def bz_of(t: Sequence[int], x: int) -> BZLabelling:
    """The labelling BZ(t, x) with y_i = f_i(t) - x and z_j = x - g_j(t)."""
    if not in_lattice(t):
        raise ValueError(f"{tuple(t)} is not in the lattice; BZ(t, x) is not integral")
    f3, g3 = forms3(t)
    y = tuple(v // 3 - x for v in f3)
    z = tuple(x - v // 3 for v in g3)
    return BZLabelling(y, z)


def project(b: BZLabelling) -> TripleLabel:
    y1, y2, y3 = b.y
    z1, z2, z3, z4, z5, z6 = b.z
    return TripleLabel(y2 + z4, y3 + z5, y3 + z6, y1 + z1, y1 + z2, y2 + z3)


def x_range(t: Sequence[int]) -> range:
    """Integers x with max_q g_q(t) <= x <= min_p f_p(t); empty off the lattice."""
    if not in_lattice(t):
        return range(0)
    f3, g3 = forms3(t)
    return range(max(g3) // 3, min(f3) // 3 + 1)


def _fiber_by_scan(t: Sequence[int]) -> list[BZTriangle]:
    return [BZTriangle(b.y, b.z) for b in (bz_of(t, x) for x in x_range(t))]


def _fiber_exhaustive(t: Sequence[int]) -> list[BZTriangle]:
    # Every label is bounded by max(t): each sits in some projection sum.
    # The y labels are scanned over the box; the projection equations then
    # fix each z label, which must also land in the box.
    if min(t) < 0:
        return []
    bound = max(t)
    l1, l2, m1, m2, n1, n2 = t
    found = []
    for y1, y2, y3 in product(range(bound + 1), repeat=3):
        z = (m2 - y1, n1 - y1, n2 - y2, l1 - y2, l2 - y3, m1 - y3)
        if min(z) < 0 or max(z) > bound:
            continue
        z1, z2, z3, z4, z5, z6 = z
        if not (z1 - z4 == z5 - z2 == z3 - z6):
            continue
        found.append(BZTriangle((y1, y2, y3), z))
    return sorted(found, key=lambda b: b.labels())


def enumerate_fiber(t: Sequence[int], mode: str = "scan") -> list[BZTriangle]:
    """All BZ triangles projecting to t.

    ``mode="scan"`` walks the integer x-interval; ``mode="exhaustive"`` searches
    the bounded label box directly and never touches the linear forms.  Both
    return triangles sorted lexicographically by (y, z).
    """
    t = tuple(t)
    if mode == "scan":
        return sorted(_fiber_by_scan(t), key=lambda b: b.labels())
    if mode == "exhaustive":
        return _fiber_exhaustive(t)
    raise ValueError(f"unknown mode {mode!r}")


def fundamental_triangles() -> dict[str, BZTriangle]:
    """The eight ray generators of the BZ cone.

    LT and RT carry the odd and even hexagon vertices; they project to
    (0,1;0,1;0,1) and (1,0;1,0;1,0) respectively.
    """
    zero_z = (0,) * 6
    return {
        "C1": BZTriangle((1, 0, 0), zero_z),
        "C2": BZTriangle((0, 1, 0), zero_z),
        "C3": BZTriangle((0, 0, 1), zero_z),
        "D1": BZTriangle((0, 0, 0), (1, 0, 0, 1, 0, 0)),
        "D3": BZTriangle((0, 0, 0), (0, 0, 1, 0, 0, 1)),
        "D5": BZTriangle((0, 0, 0), (0, 1, 0, 0, 1, 0)),
        "LT": BZTriangle((0, 0, 0), (1, 0, 1, 0, 1, 0)),
        "RT": BZTriangle((0, 0, 0), (0, 1, 0, 1, 0, 1)),
    }


def decompose(b: BZLabelling) -> dict[str, Fraction]:
    """Nonnegative coefficients of b over the fundamental triangles.

    Labels may be rational (Fraction).  Uses RT when omega >= 0 and LT when
    omega <= 0, so at most one of the two appears.
    """
    if not b.hexagon_ok:
        raise ValueError("hexagon condition fails")
    if min(b.labels()) < 0:
        raise ValueError("labels must be nonnegative")
    y1, y2, y3 = b.y
    z1, z2, z3, z4, z5, z6 = b.z
    w = b.omega
    coeffs = {name: Fraction(0) for name in FUNDAMENTAL_NAMES}
    coeffs.update(C1=Fraction(y1), C2=Fraction(y2), C3=Fraction(y3))
    if w >= 0:
        coeffs.update(D1=Fraction(z1), D3=Fraction(z3), D5=Fraction(z5), RT=Fraction(w))
    else:
        coeffs.update(D1=Fraction(z4), D3=Fraction(z6), D5=Fraction(z2), LT=Fraction(-w))
    return coeffs


def recompose(coeffs: Mapping[str, Fraction]) -> BZLabelling:
    fund = fundamental_triangles()
    y = [Fraction(0)] * 3
    z = [Fraction(0)] * 6
    for name, c in coeffs.items():
        tri = fund[name]
        y = [a + c * v for a, v in zip(y, tri.y)]
        z = [a + c * v for a, v in zip(z, tri.z)]
    return BZLabelling(tuple(y), tuple(z))
