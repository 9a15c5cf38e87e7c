"""
Label types for SU(3) triple multiplicities and the GL(3) bridge.

A triple label t = (l1, l2; m1, m2; n1, n2) collects three Dynkin labels.
Functions elsewhere in the package accept any length-6 integer sequence, so
that images of labels under lattice automorphisms (which may leave the
nonnegative orthant) can be evaluated without special casing.
"""

from dataclasses import dataclass
from typing import NamedTuple, Sequence


class DynkinLabel(NamedTuple):
    a1: int
    a2: int

    @property
    def dual(self) -> "DynkinLabel":
        return DynkinLabel(self.a2, self.a1)


class TripleLabel(NamedTuple):
    l1: int
    l2: int
    m1: int
    m2: int
    n1: int
    n2: int

    @classmethod
    def of(cls, coords: Sequence[int]) -> "TripleLabel":
        """Validated constructor: six nonnegative integers."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != 6:
            raise ValueError(f"a triple label has 6 coordinates, got {len(coords)}")
        if min(coords) < 0:
            raise ValueError(f"negative Dynkin coordinate in {coords}")
        return cls(*coords)

    @classmethod
    def parse(cls, text: str) -> "TripleLabel":
        """Parse ``l1,l2;m1,m2;n1,n2``."""
        parts = text.strip().split(";")
        if len(parts) != 3:
            raise ValueError(f"expected 'l1,l2;m1,m2;n1,n2', got {text!r}")
        coords = []
        for part in parts:
            pair = part.split(",")
            if len(pair) != 2:
                raise ValueError(f"expected two coordinates in {part!r}")
            coords.extend(int(x) for x in pair)
        return cls.of(coords)

    @property
    def l(self) -> DynkinLabel:
        return DynkinLabel(self.l1, self.l2)

    @property
    def m(self) -> DynkinLabel:
        return DynkinLabel(self.m1, self.m2)

    @property
    def n(self) -> DynkinLabel:
        return DynkinLabel(self.n1, self.n2)

    def text(self) -> str:
        return f"{self.l1},{self.l2};{self.m1},{self.m2};{self.n1},{self.n2}"

    def compact(self) -> str:
        """The ``(l1l2|m1m2|n1n2)`` style used in tables, with commas."""
        return f"({self.l1},{self.l2};{self.m1},{self.m2};{self.n1},{self.n2})"


def in_lattice(t: Sequence[int]) -> bool:
    """True iff l1+m1+n1 = l2+m2+n2 (mod 3)."""
    l1, l2, m1, m2, n1, n2 = t
    return (l1 + m1 + n1 - l2 - m2 - n2) % 3 == 0


def dual(t: Sequence[int]) -> TripleLabel:
    l1, l2, m1, m2, n1, n2 = t
    return TripleLabel(l2, l1, m2, m1, n2, n1)


def _check_decreasing(name: str, v: tuple[int, int, int]) -> None:
    if len(v) != 3:
        raise ValueError(f"{name} must have 3 parts, got {v}")
    if not v[0] >= v[1] >= v[2]:
        raise ValueError(f"{name}={v} is not weakly decreasing")


@dataclass(frozen=True)
class GLTriple:
    """Highest weights (lambda, mu, nu) of GL(3); lambda x mu -> nu."""

    lam: tuple[int, int, int]
    mu: tuple[int, int, int]
    nu: tuple[int, int, int]

    def __post_init__(self):
        for name in ("lam", "mu", "nu"):
            v = tuple(int(x) for x in getattr(self, name))
            object.__setattr__(self, name, v)
            _check_decreasing(name, v)

    @classmethod
    def parse(cls, text: str) -> "GLTriple":
        """Parse ``l1,l2,l3|m1,m2,m3|n1,n2,n3``."""
        parts = text.strip().split("|")
        if len(parts) != 3:
            raise ValueError(f"expected 'l1,l2,l3|m1,m2,m3|n1,n2,n3', got {text!r}")
        vecs = [tuple(int(x) for x in p.split(",")) for p in parts]
        return cls(*vecs)

    @property
    def size_balanced(self) -> bool:
        return sum(self.lam) + sum(self.mu) == sum(self.nu)

    @property
    def is_polynomial(self) -> bool:
        return min(self.lam[2], self.mu[2], self.nu[2]) >= 0

    @property
    def delta(self) -> int:
        return self.lam[2] - self.mu[2]

    def text(self) -> str:
        return "|".join(",".join(str(x) for x in v) for v in (self.lam, self.mu, self.nu))

    def flat(self) -> tuple[int, ...]:
        return self.lam + self.mu + self.nu


def gl_to_su(g: GLTriple) -> TripleLabel:
    """Restriction to SU(3). The nu pair is read crossed: W_nu restricts to V_{n*}."""
    lam, mu, nu = g.lam, g.mu, g.nu
    return TripleLabel(
        lam[0] - lam[1], lam[1] - lam[2],
        mu[0] - mu[1], mu[1] - mu[2],
        nu[1] - nu[2], nu[0] - nu[1],
    )


def su_to_gl0(t: Sequence[int]) -> GLTriple:
    """The section with lambda3 = mu3 = 0; nu3 is fixed by |lambda|+|mu| = |nu|."""
    if not in_lattice(t):
        raise ValueError(f"{tuple(t)} is not in the lattice; nu3 would be fractional")
    l1, l2, m1, m2, n1, n2 = t
    lam = (l1 + l2, l2, 0)
    mu = (m1 + m2, m2, 0)
    # nu = (nu3 + n1 + n2, nu3 + n1, nu3)
    rest = sum(lam) + sum(mu) - (2 * n1 + n2)
    assert rest % 3 == 0
    nu3 = rest // 3
    return GLTriple(lam, mu, (nu3 + n1 + n2, nu3 + n1, nu3))
