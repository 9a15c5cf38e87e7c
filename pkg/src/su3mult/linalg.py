"""Exact integer/rational matrix helpers (thin layer over sympy)."""

from fractions import Fraction
from typing import Sequence

import sympy


def int_det(rows: Sequence[Sequence[int]]) -> int:
    return int(sympy.Matrix(rows).det(method="bareiss"))


def rational_inverse(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    inv = sympy.Matrix(rows).inv()
    return [[Fraction(int(v.p), int(v.q)) for v in inv.row(r)] for r in range(inv.rows)]


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]
