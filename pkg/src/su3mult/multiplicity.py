"""
Closed-form multiplicities.

On the lattice, c(t) counts the integers x in [max_q g_q(t), min_p f_p(t)], so
c(t) = max(0, min f - max g + 1).  Inside the chamber C(i, j) this is the
affine form 1 + f_i - g_j.
"""

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .bz import forms3
from .chambers import chamber_cell, chamber_contains, exterior_rays
from .lattice import DynkinLabel, GLTriple, gl_to_su, in_lattice
from .linalg import int_det


def triple_multiplicity(t: Sequence[int]) -> int:
    """dim (V_l x V_m x V_n)^SU(3); zero off the lattice or outside the cone."""
    if not in_lattice(t):
        return 0
    f3, g3 = forms3(t)
    return max(0, (min(f3) - max(g3)) // 3 + 1)


def tensor_multiplicity(l: DynkinLabel, m: DynkinLabel, n: DynkinLabel) -> int:
    """Multiplicity of V_n in V_l x V_m, i.e. c(l, m, n*)."""
    return triple_multiplicity((l[0], l[1], m[0], m[1], n[1], n[0]))


@dataclass(frozen=True)
class LinearForm:
    """Linear form on (l1, l2, m1, m2, n1, n2) with coefficients over 3."""

    coeffs3: tuple[int, ...]

    def value3(self, t: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs3, t))

    def __call__(self, t: Sequence[int]) -> int:
        v = self.value3(t)
        if v % 3:
            raise ValueError(f"form is not integral at {tuple(t)}; not a lattice point?")
        return v // 3


_UNIT = [tuple(int(i == k) for i in range(6)) for k in range(6)]


def chamber_formula(i: int, j: int) -> LinearForm:
    """L_{i,j} = f_i - g_j, so that c = 1 + L_{i,j} on C(i, j)."""
    if not (1 <= i <= 3 and 1 <= j <= 6):
        raise ValueError(f"no chamber ({i}, {j})")
    coeffs = []
    for e in _UNIT:
        f3, g3 = forms3(e)
        coeffs.append(f3[i - 1] - g3[j - 1])
    return LinearForm(tuple(coeffs))


def multiplicity_via_min(t: Sequence[int]) -> int:
    """1 + min over (i, j) of f_i(t) - g_j(t); requires a lattice point of the cone."""
    if not in_lattice(t):
        raise ValueError(f"{tuple(t)} is not in the lattice")
    f3, g3 = forms3(t)
    if min(f3) < max(g3):
        raise ValueError(f"{tuple(t)} is outside the cone")
    return 1 + min(a - b for a in f3 for b in g3) // 3


def multiplicity_det(t: Sequence[int], chamber: tuple[int, int]) -> int:
    """1 + |det(t1..t5, t)| / 3 with t1..t5 the exterior rays of the chamber."""
    i, j = chamber
    if not chamber_contains(i, j, t):
        raise ValueError(f"{tuple(t)} is not in chamber C({i},{j})")
    cols = [*exterior_rays(chamber_cell(i, j)), tuple(t)]
    d = int_det([list(row) for row in zip(*cols)])
    if d % 3:
        raise ArithmeticError(f"determinant {d} not divisible by 3")
    return 1 + abs(d) // 3


def lr_coefficient(g: GLTriple) -> int:
    """Multiplicity of W_nu in W_lambda x W_mu via the SU(3) restriction."""
    if not g.size_balanced:
        return 0
    return triple_multiplicity(gl_to_su(g))


def _fits(inner: Sequence[int], outer: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(inner, outer))


def lr_tableau_oracle(g: GLTriple) -> int:
    """Count LR tableaux of shape nu/lambda and content mu by backtracking.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left).  Rows weakly increase, columns strictly increase, and the
    word read so far must stay a lattice word.
    """
    lam, mu, nu = g.lam, g.mu, g.nu
    if min(lam[2], mu[2], nu[2]) < 0:
        raise ValueError("the tableau oracle needs partitions")
    if not g.size_balanced or not _fits(lam, nu):
        return 0
    cells = [(r, c) for r in range(3) for c in range(nu[r] - 1, lam[r] - 1, -1)]
    letters = [k + 1 for k in range(3) if mu[k] > 0]
    filling: dict[tuple[int, int], int] = {}
    counts = [0, 0, 0, 0]

    def extend(pos: int) -> int:
        if pos == len(cells):
            return int(counts[1:] == list(mu))
        r, c = cells[pos]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        total = 0
        for a in letters:
            if right is not None and a > right:
                continue
            if above is not None and a <= above:
                continue
            if counts[a] == mu[a - 1]:
                continue
            if a > 1 and counts[a] + 1 > counts[a - 1]:
                continue
            counts[a] += 1
            filling[(r, c)] = a
            total += extend(pos + 1)
            del filling[(r, c)]
            counts[a] -= 1
        return total

    return extend(0)


def lr_coefficient_oracle(g: GLTriple) -> int:
    """Tableau count after shifting by determinant powers to reach partitions."""
    if not g.size_balanced:
        return 0
    s, u = g.lam[2], g.mu[2]
    lam = tuple(x - s for x in g.lam)
    mu = tuple(x - u for x in g.mu)
    nu = tuple(x - s - u for x in g.nu)
    if nu[2] < 0:
        return 0
    return lr_tableau_oracle(GLTriple(lam, mu, nu))


def delta_involution(g: GLTriple) -> GLTriple:
    """(lambda, mu, nu) -> (lambda - d, mu + d, nu) with d = lambda3 - mu3."""
    d = g.delta
    return GLTriple(
        tuple(x - d for x in g.lam), tuple(x + d for x in g.mu), g.nu
    )


def su2_multiplicity(l: int, m: int, n: int) -> int:
    """SU(2) triple multiplicity: parity plus triangle inequalities."""
    if min(l, m, n) < 0:
        raise ValueError("SU(2) labels are nonnegative")
    ok = (l + m + n) % 2 == 0 and l <= m + n and m <= l + n and n <= l + m
    return int(ok)


def su2_count_displayed(l: int, m: int, n: int) -> int:
    """Integer solutions of 2x = l + m + n, x <= l, x <= m, x >= 0, taken literally."""
    return sum(1 for x in range(0, min(l, m) + 1) if 2 * x == l + m + n)


def su2_count_pieri(l: int, m: int, n: int) -> int:
    """Integer solutions of 2x = l + m - n, 0 <= x <= min(l, m)."""
    return sum(1 for x in range(0, min(l, m) + 1) if 2 * x == l + m - n)


def su2_weight_oracle(l: int, m: int, n: int) -> int:
    """Invariants in V_l x V_m x V_n from weight multiplicities (zero weight minus weight 2)."""
    hist: dict[int, int] = {}
    for a, b, c in product(range(-l, l + 1, 2), range(-m, m + 1, 2), range(-n, n + 1, 2)):
        hist[a + b + c] = hist.get(a + b + c, 0) + 1
    return hist.get(0, 0) - hist.get(2, 0)
