"""Self-check suites run by ``su3mult verify``."""

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Optional

from . import chambers as ch
from .bz import enumerate_fiber
from .lattice import in_lattice
from .multiplicity import triple_multiplicity
from .symmetries import is_lattice_preserving, subgroup, symmetry_group


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks"
        if self.counterexample:
            text += f"; counterexample: {self.counterexample}"
        return text


def sweep(bound: int) -> Iterator[tuple[int, ...]]:
    """Lattice points with all coordinates in [0, bound], lexicographic."""
    for t in product(range(bound + 1), repeat=6):
        if in_lattice(t):
            yield t


def oracle_equivalence(bound: int) -> SuiteResult:
    n = 0
    for t in sweep(bound):
        c = triple_multiplicity(t)
        scan = len(enumerate_fiber(t, "scan"))
        full = len(enumerate_fiber(t, "exhaustive"))
        n += 1
        if not c == scan == full:
            return SuiteResult("oracle-equivalence", False, n, f"t={t} closed={c} scan={scan} exhaustive={full}")
    return SuiteResult("oracle-equivalence", True, n)


def ray_table() -> SuiteResult:
    rays = ch.RAYS
    n = 0
    for name, r in rays.items():
        n += 1
        if not ch.in_cone(r):
            return SuiteResult("ray-table", False, n, f"{name}={tuple(r)} outside the cone")
        failing = sorted(k for k, ok in ch.conditions(r).items() if not ok)
        if failing != [name]:
            return SuiteResult("ray-table", False, n, f"{name}={tuple(r)} fails {failing}")
        want = 2 if name == "STAR" else 1
        if triple_multiplicity(r) != want:
            return SuiteResult("ray-table", False, n, f"c({name}) = {triple_multiplicity(r)}")

    def total(names):
        return tuple(sum(rays[k][i] for k in names) for i in range(6))

    n += 1
    sums = {total(["C1", "C2", "C3"]), total(["D1", "D3", "D5"]), total(["LT", "RT"]), tuple(rays["STAR"])}
    if len(sums) != 1:
        return SuiteResult("ray-table", False, n, f"ray relations fail: {sorted(sums)}")
    return SuiteResult("ray-table", True, n)


def f_vector() -> SuiteResult:
    fv = ch.f_vector()
    if fv != [1, 9, 35, 75, 93, 63, 18]:
        return SuiteResult("f-vector", False, 1, f"f-vector {fv}")
    n = 1
    for cell in ch.cells():
        n += 1
        p = cell.interior_point()
        try:
            got = ch.locate(p)
        except ValueError:
            return SuiteResult("f-vector", False, n, f"cell {cell.bitmask}: point {p} outside the cone")
        if got != cell:
            return SuiteResult("f-vector", False, n, f"cell {cell.bitmask}: point {p} located in {got.bitmask}")
    return SuiteResult("f-vector", True, n)


def group_orders() -> SuiteResult:
    want = {"G": 144, "Gg": 12, "Gl": 72, "Glg": 6}
    got = {k: len(subgroup(k)) for k in want}
    if got != want:
        return SuiteResult("group-order", False, 1, f"orders {got}")
    n = 1
    for s in symmetry_group().elements:
        n += 1
        if not is_lattice_preserving(s):
            return SuiteResult("group-order", False, n, f"element {s.index} is not a lattice automorphism")
    return SuiteResult("group-order", True, n)


def symmetry_invariance(bound: int) -> SuiteResult:
    group = symmetry_group().elements
    n = 0
    for t in sweep(bound):
        c = triple_multiplicity(t)
        for s in group:
            n += 1
            image = s.apply(t)
            if triple_multiplicity(image) != c:
                return SuiteResult("symmetry-invariance", False, n, f"element {s.index}: c{t}={c}, c{image}={triple_multiplicity(image)}")
    return SuiteResult("symmetry-invariance", True, n)


def run_all(bound: int = 6, echo: Optional[Callable[[str], None]] = None) -> list[SuiteResult]:
    suites = [
        lambda: oracle_equivalence(bound),
        ray_table,
        f_vector,
        group_orders,
        lambda: symmetry_invariance(bound),
    ]
    results = []
    for suite in suites:
        try:
            res = suite()
        except Exception as exc:  # a broken table can surface as an exception
            res = SuiteResult(getattr(suite, "__name__", "suite"), False, 0, f"{type(exc).__name__}: {exc}")
        results.append(res)
        if echo:
            echo(res.line())
    return results
