"""Stable values of c(t + k*u) when c(u) = 1."""

from typing import Optional, Sequence

from .chambers import containing_chambers, in_cone
from .lattice import in_lattice
from .multiplicity import chamber_formula, triple_multiplicity


def _check(t: Sequence[int], u: Sequence[int]) -> None:
    if not in_lattice(t) or not in_lattice(u):
        raise ValueError("t and u must be lattice points")
    if not in_cone(t):
        raise ValueError(f"t={tuple(t)} is outside the cone")
    if not in_cone(u):
        raise ValueError(f"u={tuple(u)} is outside the cone")
    if triple_multiplicity(u) != 1:
        raise ValueError(f"c(u) = {triple_multiplicity(u)}, expected 1")


def _limit_chamber(t: Sequence[int], u: Sequence[int]) -> tuple[int, int]:
    """A chamber containing u + eps*t for small eps > 0.

    c - 1 = min over (i, j) of L_ij, so the minimizing (i, j) at u + eps*t is
    found by comparing the pairs (L_ij(u), L_ij(t)) lexicographically.
    """
    keys = {
        (i, j): (chamber_formula(i, j).value3(u), chamber_formula(i, j).value3(t))
        for i in range(1, 4) for j in range(1, 7)
    }
    return min(keys, key=lambda ij: (keys[ij], ij))


def stable_value(t: Sequence[int], u: Sequence[int]) -> int:
    """1 + min{L_ij(t) : u in the closed chamber C(i, j)}."""
    _check(t, u)
    by_min = 1 + min(chamber_formula(i, j)(t) for i, j in containing_chambers(u))
    i0, j0 = _limit_chamber(t, u)
    by_limit = 1 + chamber_formula(i0, j0)(t)
    if by_min != by_limit:
        raise ArithmeticError(f"stable value mismatch: {by_min} vs {by_limit}")
    return by_min


def sequence(t: Sequence[int], u: Sequence[int], k_max: int) -> list[int]:
    return [triple_multiplicity([a + k * b for a, b in zip(t, u)]) for k in range(k_max + 1)]


def stabilization_index(t: Sequence[int], u: Sequence[int], k_max: int) -> Optional[int]:
    """Smallest k with c(t + j*u) equal to the stable value for all k <= j <= k_max."""
    target = stable_value(t, u)
    values = sequence(t, u, k_max)
    if values[-1] != target:
        return None
    k = k_max
    while k > 0 and values[k - 1] == target:
        k -= 1
    return k
