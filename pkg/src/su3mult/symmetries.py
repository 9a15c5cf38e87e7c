"""
Linear symmetries of the triple multiplicities.

Every symmetry permutes the eight exterior ray generators, keeping {LT, RT}
and either keeping or swapping the sets {C1, C2, C3} and {D1, D3, D5}.  The
group is built by listing all 144 such permutations and realizing each as a
linear map through the lattice basis (rC1, rC2, rC3, rD1, rD3, rLT); the
remaining rays are then checked, not assumed.

These maps are automorphisms of the index-3 lattice of triple labels, not of
Z^6, so in standard coordinates their entries lie in (1/3)Z.  A Symmetry keeps
``matrix3`` (three times the matrix, integral) and ``lattice_matrix`` (the same
map in lattice-basis coordinates, integral and unimodular).
"""

import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Optional, Sequence

from .bz import BZLabelling, fundamental_triangles
from .chambers import C_SET, D_SET, RAY_NAMES, RAYS, Cell, chambers
from .lattice import GLTriple, in_lattice
from .linalg import identity, int_det, matmul, matvec, rational_inverse
from .multiplicity import delta_involution

EXTERIOR = RAY_NAMES[:8]
BASIS = ("C1", "C2", "C3", "D1", "D3", "LT")
_C = ("C1", "C2", "C3")
_D = ("D1", "D3", "D5")


@dataclass(frozen=True)
class RayPermutation:
    """Images of the eight exterior rays; STAR is always fixed."""

    images: tuple  # tuple of (name, image) pairs in EXTERIOR order

    def __post_init__(self):
        m = dict(self.images)
        if set(m) != set(EXTERIOR) or set(m.values()) != set(EXTERIOR):
            raise ValueError("not a permutation of the exterior rays")
        object.__setattr__(self, "images", tuple((n, m[n]) for n in EXTERIOR))
        if {m["LT"], m["RT"]} != {"LT", "RT"}:
            raise ValueError("must stabilize {LT, RT}")
        c_img = frozenset(m[n] for n in _C)
        d_img = frozenset(m[n] for n in _D)
        if (c_img, d_img) not in ((C_SET, D_SET), (D_SET, C_SET)):
            raise ValueError("must stabilize or swap the C and D ray sets")

    @classmethod
    def from_map(cls, mapping: dict) -> "RayPermutation":
        return cls(tuple(mapping.items()))

    def __call__(self, name: str) -> str:
        if name == "STAR":
            return "STAR"
        return dict(self.images)[name]

    def as_dict(self) -> dict:
        d = dict(self.images)
        d["STAR"] = "STAR"
        return d

    def compose(self, other: "RayPermutation") -> "RayPermutation":
        """(self o other)(X) = self(other(X))."""
        return RayPermutation(tuple((n, self(other(n))) for n in EXTERIOR))

    def inverse(self) -> "RayPermutation":
        return RayPermutation(tuple((img, n) for n, img in self.images))

    @property
    def swaps_cd(self) -> bool:
        return self("C1") in D_SET

    @property
    def is_identity(self) -> bool:
        return all(n == img for n, img in self.images)


IDENTITY_PERM = RayPermutation(tuple((n, n) for n in EXTERIOR))


def _columns(names: Sequence[str]) -> list[list[int]]:
    """Matrix whose columns are the ray generators of ``names``."""
    return [list(row) for row in zip(*(RAYS[n] for n in names))]


@lru_cache(maxsize=None)
def _basis_inverse() -> tuple:
    return tuple(tuple(r) for r in rational_inverse(_columns(BASIS)))


def realize_matrix(p: RayPermutation) -> list[list[Fraction]]:
    """The linear map sending r_X to r_p(X), solved on the lattice basis.

    Raises ArithmeticError if the solved map disagrees on D5, RT or STAR.
    """
    images = _columns([p(n) for n in BASIS])
    m = matmul(images, [list(r) for r in _basis_inverse()])
    for name in RAY_NAMES:
        if matvec(m, RAYS[name]) != tuple(RAYS[p(name)]):
            raise ArithmeticError(f"no consistent linear map: {name} -> {p(name)} fails")
    return [[Fraction(v) for v in row] for row in m]


@dataclass(frozen=True)
class Symmetry:
    perm: RayPermutation
    matrix3: tuple  # 3 * matrix, integer rows
    lattice_matrix: tuple  # matrix in coordinates of BASIS, integer rows
    index: int = field(default=-1, compare=False)

    @classmethod
    def from_perm(cls, p: RayPermutation, index: int = -1) -> "Symmetry":
        m = realize_matrix(p)
        if any((3 * v).denominator != 1 for row in m for v in row):
            raise ArithmeticError("matrix entries outside (1/3)Z")
        m3 = tuple(tuple(int(3 * v) for v in row) for row in m)
        b = _columns(BASIS)
        binv = [list(r) for r in _basis_inverse()]
        lm = matmul(binv, matmul(m, b))
        if any(v.denominator != 1 for row in lm for v in row):
            raise ArithmeticError("not an automorphism of the lattice")
        lm = tuple(tuple(int(v) for v in row) for row in lm)
        return cls(p, m3, lm, index)

    @property
    def matrix(self) -> list[list[Fraction]]:
        return [[Fraction(v, 3) for v in row] for row in self.matrix3]

    @property
    def det(self) -> int:
        return int_det([list(r) for r in self.lattice_matrix])

    @property
    def is_integral(self) -> bool:
        return all(v % 3 == 0 for row in self.matrix3 for v in row)

    def apply(self, t: Sequence[int]) -> tuple[int, ...]:
        """Image of a lattice point (integral by lattice preservation)."""
        out = []
        for row in self.matrix3:
            v = sum(a * b for a, b in zip(row, t))
            if v % 3:
                raise ValueError(f"{tuple(t)} is not a lattice point")
            out.append(v // 3)
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "permutation": self.perm.as_dict(),
            "matrix_times_3": [list(r) for r in self.matrix3],
            "denominator": 3,
            "lattice_matrix": [list(r) for r in self.lattice_matrix],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _all_permutations() -> list[RayPermutation]:
    out = []
    for swap in (False, True):
        src_c, src_d = (_D, _C) if swap else (_C, _D)
        for pc in permutations(src_c):
            for pd in permutations(src_d):
                for pt in (("LT", "RT"), ("RT", "LT")):
                    m = dict(zip(_C, pc)) | dict(zip(_D, pd)) | dict(zip(("LT", "RT"), pt))
                    out.append(RayPermutation.from_map(m))
    return out


class Group:
    """The full symmetry group with a multiplication table over element indices."""

    def __init__(self, elements: list[Symmetry]):
        self.elements = elements
        self._by_perm = {s.perm: s.index for s in elements}
        self._by_matrix = {s.matrix3: s.index for s in elements}
        self.table = [[self._by_perm[a.perm.compose(b.perm)] for b in elements] for a in elements]
        e = self.identity
        self.inv = [row.index(e) for row in self.table]

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, k: int) -> Symmetry:
        return self.elements[k]

    @property
    def identity(self) -> int:
        return self._by_perm[IDENTITY_PERM]

    def find_matrix(self, matrix) -> Optional[int]:
        """Index of the element with this (rational) matrix, if any."""
        key = tuple(tuple(int(3 * Fraction(v)) for v in row) for row in matrix)
        return self._by_matrix.get(key)

    def closure(self, generators: Iterable[int]) -> list[int]:
        gens = list(generators)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.table[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return sorted(seen)

    def order_of(self, k: int) -> int:
        e, cur, n = self.identity, k, 1
        while cur != e:
            cur = self.table[cur][k]
            n += 1
        return n


@lru_cache(maxsize=None)
def _group() -> Group:
    perms = _all_permutations()
    elements = [Symmetry.from_perm(p, k) for k, p in enumerate(perms)]
    return Group(elements)


def build_group() -> list[Symmetry]:
    return list(_group().elements)


def symmetry_group() -> Group:
    return _group()


# Coordinate maps generating the general symmetries.
def label_permutation_matrix(order: Sequence[int]) -> list[list[int]]:
    """Matrix sending (X0; X1; X2) to (X_order[0]; X_order[1]; X_order[2])."""
    m = [[0] * 6 for _ in range(6)]
    for block, src in enumerate(order):
        for k in range(2):
            m[2 * block + k][2 * src + k] = 1
    return m


DUALITY_MATRIX = [[int(j == (i ^ 1)) for j in range(6)] for i in range(6)]


def _compose_maps(*mats):
    out = identity(6)
    for m in mats:
        out = matmul(out, m)
    return out


def s1_matrix():
    """(l; m; n) -> (m*; l*; n*)."""
    return _compose_maps(DUALITY_MATRIX, label_permutation_matrix((1, 0, 2)))


def s2_matrix():
    """(l; m; n) -> (l*; n*; m*)."""
    return _compose_maps(DUALITY_MATRIX, label_permutation_matrix((0, 2, 1)))


def named_element(name: str) -> Symmetry:
    g = _group()
    mats = {
        "identity": identity(6),
        "duality": DUALITY_MATRIX,
        "swap_lm": label_permutation_matrix((1, 0, 2)),
        "swap_mn": label_permutation_matrix((0, 2, 1)),
        "swap_ln": label_permutation_matrix((2, 1, 0)),
        "cycle_lmn": label_permutation_matrix((1, 2, 0)),
        "s1": s1_matrix(),
        "s2": s2_matrix(),
    }
    k = g.find_matrix(mats[name])
    if k is None:
        raise LookupError(f"{name} is not in the symmetry group")
    return g[k]


GROUP_NAMES = ("G", "Gg", "Gl", "Glg")


@lru_cache(maxsize=None)
def subgroup_indices(which: str) -> tuple[int, ...]:
    g = _group()
    if which == "G":
        return tuple(range(len(g)))
    if which == "Gl":
        return tuple(s.index for s in g.elements if not s.perm.swaps_cd)
    if which == "Gg":
        gens = [named_element(n).index for n in ("swap_lm", "swap_mn", "duality")]
        return tuple(g.closure(gens))
    if which == "Glg":
        return tuple(sorted(set(subgroup_indices("Gl")) & set(subgroup_indices("Gg"))))
    raise KeyError(f"unknown group {which!r}; expected one of {GROUP_NAMES}")


def subgroup(which: str) -> list[Symmetry]:
    g = _group()
    return [g[k] for k in subgroup_indices(which)]


@dataclass(frozen=True)
class BZSymmetry:
    """Label permutation of a BZ labelling: new.y[y_perm[i]] = y[i], same for z."""

    y_perm: tuple[int, int, int]
    z_perm: tuple[int, ...]

    def apply(self, b: BZLabelling) -> BZLabelling:
        y = [0] * 3
        z = [0] * 6
        for i, k in enumerate(self.y_perm):
            y[k] = b.y[i]
        for i, k in enumerate(self.z_perm):
            z[k] = b.z[i]
        return BZLabelling(tuple(y), tuple(z))

    @property
    def is_dihedral(self) -> bool:
        """z_perm is a symmetry of the hexagon Z1..Z6 (adjacency preserved)."""
        adj = {frozenset((q, (q + 1) % 6)) for q in range(6)}
        return {frozenset(self.z_perm[q] for q in e) for e in adj} == adj


# hexagon index -> (opposite pair, odd/even class); indices 0-based for z1..z6
_Z_PAIR = {0: "D1", 3: "D1", 2: "D3", 5: "D3", 1: "D5", 4: "D5"}
_Z_CLASS = {q: ("LT" if q % 2 == 0 else "RT") for q in range(6)}


def lift(s: Symmetry) -> Optional[BZSymmetry]:
    """The symmetry of the BZ triangles inducing s, or None if s does not lift.

    A lift must send each fundamental triangle over r_X to the one over
    r_s(X), and so must respect D1 + D3 + D5 = LT + RT among them.
    """
    fund = fundamental_triangles()
    p = s.perm
    lhs = fund[p("D1")] + fund[p("D3")] + fund[p("D5")]
    rhs = fund[p("LT")] + fund[p("RT")]
    if lhs != rhs:
        return None
    y_perm = tuple(int(p(f"C{i + 1}")[1]) - 1 for i in range(3))
    z_perm = []
    for q in range(6):
        target = [r for r in range(6) if _Z_PAIR[r] == p(_Z_PAIR[q]) and _Z_CLASS[r] == p(_Z_CLASS[q])]
        assert len(target) == 1
        z_perm.append(target[0])
    bz = BZSymmetry(y_perm, tuple(z_perm))
    for name, tri in fund.items():
        if bz.apply(tri).labels() != fund[p(name)].labels():
            raise ArithmeticError(f"lift of {name} does not land on {p(name)}")
    return bz


def act_on_cell(s: Symmetry, c: Cell) -> Cell:
    return Cell(frozenset(s.perm(n) for n in c.absent))


def orbit(c: Cell, which: str = "G") -> list[Cell]:
    seen = {act_on_cell(s, c) for s in subgroup(which)}
    return sorted(seen, key=lambda x: [-int(b) for b in x.bitmask])


def chamber_action(s: Symmetry) -> dict[tuple[int, int], tuple[int, int]]:
    by_cell = {cell: (i, j) for i, j, cell in chambers()}
    return {(i, j): by_cell[act_on_cell(s, cell)] for i, j, cell in chambers()}


def element_order_histogram(which: str = "G") -> dict[int, int]:
    g = _group()
    return dict(sorted(Counter(g.order_of(k) for k in subgroup_indices(which)).items()))


def is_lattice_preserving(s: Symmetry) -> bool:
    """Images of a lattice basis of the index-3 lattice are lattice points."""
    basis = [(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 0, 2), (0, 0, 1, 0, 0, 1),
             (0, 0, 0, 1, 0, 2), (0, 0, 0, 0, 1, 1), (0, 0, 0, 0, 0, 3)]
    return all(in_lattice(s.apply(v)) for v in basis) and abs(s.det) == 1


def lr_symmetry_group() -> dict:
    """Order of the linear symmetry group of the GL(3) tensor multiplicities.

    It is the product of the SU(3) group with the two-element group generated
    by the determinant shift (lambda, mu, nu) -> (lambda - d, mu + d, nu).
    """
    probe = GLTriple((3, 1, 1), (2, 2, 0), (4, 3, 2))
    once = delta_involution(probe)
    if delta_involution(once) != probe or once == probe:
        raise ArithmeticError("determinant shift is not an involution")
    return {
        "order": 2 * len(_group()),
        "factors": {"su3_symmetries": len(_group()), "determinant_shift": 2},
        "involution": "(lambda - d, mu + d, nu), d = lambda3 - mu3",
    }
