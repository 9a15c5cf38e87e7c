"""
Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import islice

from . import chambers as ch
from . import symmetries as sy
from .bz import eval_forms
from .lattice import GLTriple, TripleLabel, in_lattice
from .multiplicity import (
    lr_coefficient,
    lr_coefficient_oracle,
    su2_multiplicity,
    triple_multiplicity,
)
from .stability import stabilization_index, stable_value
from .verify import run_all

CHUNK = 1024


class UsageError(Exception):
    pass


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SU3MULT_THREADS", "1")))
    except ValueError:
        return 1


def _frac(v: Fraction) -> str:
    return str(v)


def _label(text: str) -> TripleLabel:
    try:
        return TripleLabel.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _gl(text: str) -> GLTriple:
    try:
        return GLTriple.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cell(text: str) -> ch.Cell:
    """A cell from a 9-character bitmask or comma separated ray names."""
    try:
        if set(text) <= {"0", "1"}:
            return ch.Cell.from_bitmask(text)
        return ch.Cell.from_names(x.strip() for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _batch_items(path: str, parse):
    """Yield parsed JSON-lines records; a bad line raises UsageError with its number."""
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield parse(json.loads(line))
            except (ValueError, TypeError) as exc:
                raise UsageError(f"line {lineno}: {exc}") from None


def _run_batch(path, parse, compute, emit):
    items = _batch_items(path, parse)
    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        while True:
            chunk = list(islice(items, CHUNK))
            if not chunk:
                break
            for item, result in zip(chunk, pool.map(compute, chunk)):
                emit(item, result)


def _parse_label_record(rec) -> TripleLabel:
    if isinstance(rec, dict):
        rec = rec.get("t")
    if isinstance(rec, str):
        return TripleLabel.parse(rec)
    if isinstance(rec, list):
        return TripleLabel.of(rec)
    raise ValueError(f"cannot read a triple label from {rec!r}")


def _parse_gl_record(rec) -> GLTriple:
    if isinstance(rec, dict):
        rec = rec.get("g")
    if isinstance(rec, str):
        return GLTriple.parse(rec)
    if isinstance(rec, list) and len(rec) == 3:
        return GLTriple(*[tuple(v) for v in rec])
    raise ValueError(f"cannot read a GL triple from {rec!r}")


def explain(t: TripleLabel) -> dict:
    forms = eval_forms(t)
    c = triple_multiplicity(t)
    info = {
        "t": t.text(),
        "c": c,
        "omega": _frac(forms.omega),
        "f": [_frac(v) for v in forms.f],
        "g": [_frac(v) for v in forms.g],
    }
    if not in_lattice(t):
        info.update(chamber=None, cell=None, formula="off the lattice: c = 0")
    elif not forms.in_cone:
        info.update(chamber=None, cell=None, formula="outside the cone: min f < max g, c = 0")
    else:
        owners = ch.containing_chambers(t)
        i, j = owners[0]
        info.update(
            chamber=f"C({i},{j})",
            chambers=[f"C({a},{b})" for a, b in owners],
            cell=ch.locate(t).bitmask,
            formula=f"1 + f{i} - g{j}",
        )
    return info


def _print_kv(info: dict, out) -> None:
    for key, value in info.items():
        if isinstance(value, list):
            value = " ".join(str(v) for v in value)
        print(f"{key}: {value}", file=out)


def cmd_mult(args, out) -> int:
    def emit(t, c):
        if args.explain:
            info = explain(t)
            if args.json:
                print(json.dumps(info), file=out)
            else:
                _print_kv(info, out)
        elif args.json:
            print(json.dumps({"t": t.text(), "c": c}), file=out)
        else:
            print(c, file=out)

    if args.batch:
        _run_batch(args.batch, _parse_label_record, triple_multiplicity, emit)
        return 0
    if args.label is None:
        raise UsageError("mult needs a label or --batch FILE")
    t = _label(args.label)
    emit(t, triple_multiplicity(t))
    return 0


def cmd_lr(args, out) -> int:
    status = 0

    def compute(g):
        value = lr_coefficient(g)
        check = None
        if args.oracle:
            check = lr_coefficient_oracle(g)
        return value, check

    def emit(g, result):
        nonlocal status
        value, check = result
        if args.json:
            rec = {"g": g.text(), "lr": value}
            if args.oracle:
                rec.update(oracle=check, agree=check == value)
            print(json.dumps(rec), file=out)
        elif args.oracle:
            print(f"{value} oracle={check} {'agree' if check == value else 'DISAGREE'}", file=out)
        else:
            print(value, file=out)
        if args.oracle and check != value:
            status = 1

    if args.batch:
        _run_batch(args.batch, _parse_gl_record, compute, emit)
        return status
    if args.triple is None:
        raise UsageError("lr needs a triple or --batch FILE")
    g = _gl(args.triple)
    emit(g, compute(g))
    return status


def cmd_su2(args, out) -> int:
    try:
        value = su2_multiplicity(args.l, args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"l": args.l, "m": args.m, "n": args.n, "c": value}), file=out)
    else:
        print(value, file=out)
    return 0


def cmd_chamber(args, out) -> int:
    t = _label(args.label)
    if not in_lattice(t) or not ch.in_cone(t):
        raise UsageError(f"{t.text()} is not a lattice point of the cone")
    cell = ch.locate(t)
    owners = [f"C({i},{j})" for i, j in ch.containing_chambers(t)]
    if args.json:
        print(json.dumps({"t": t.text(), "cell": cell.to_dict(), "chambers": owners}), file=out)
    else:
        print(f"cell: {cell.bitmask} dim {cell.dim} rays {' '.join(cell.rays) or '-'}", file=out)
        print(f"chambers: {' '.join(owners)}", file=out)
    return 0


def _emit_cells(cells, args, out, labels=None) -> None:
    for k, cell in enumerate(cells):
        tag = labels[k] if labels else None
        if args.json:
            rec = cell.to_dict()
            if tag:
                rec["chamber"] = tag
            print(json.dumps(rec), file=out)
            continue
        head = f"{tag} " if tag else ""
        print(f"{head}{cell.bitmask} dim {cell.dim} {' '.join(cell.rays) or '-'}", file=out)
        if args.diagram:
            print(ch.render_diagram(cell), file=out)
            print(file=out)


def cmd_cells(args, out) -> int:
    if args.count:
        print(" ".join(str(v) for v in ch.f_vector()), file=out)
        return 0
    cells = ch.cells()
    if args.dim is not None:
        if not 0 <= args.dim <= 6:
            raise UsageError("--dim must be between 0 and 6")
        cells = [c for c in cells if c.dim == args.dim]
    _emit_cells(cells, args, out)
    return 0


def cmd_chambers(args, out) -> int:
    rows = ch.chambers()
    _emit_cells([c for _, _, c in rows], args, out, labels=[f"C({i},{j})" for i, j, _ in rows])
    return 0


def cmd_rays(args, out) -> int:
    for name, r in ch.RAYS.items():
        if args.json:
            print(json.dumps({"name": name, "symbol": ch.display_name(name), "vector": list(r)}), file=out)
        else:
            print(f"{name} {r.compact()}", file=out)
    return 0


def cmd_diagram(args, out) -> int:
    given = [x for x in (args.cell, args.point, args.chamber) if x is not None]
    if len(given) != 1:
        raise UsageError("diagram needs exactly one of --cell, --point, --chamber")
    if args.cell is not None:
        cell = _cell(args.cell)
    elif args.point is not None:
        t = _label(args.point)
        if not ch.in_cone(t):
            raise UsageError(f"{t.text()} is outside the cone")
        cell = ch.locate(t)
    else:
        try:
            i, j = (int(v) for v in args.chamber.split(","))
            cell = ch.chamber_cell(i, j)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps(cell.to_dict() | {"diagram": ch.render_diagram(cell)}), file=out)
    else:
        print(ch.render_diagram(cell), file=out)
    return 0


def _group_name(name: str) -> str:
    if name not in sy.GROUP_NAMES:
        raise UsageError(f"unknown group {name!r}; expected one of {', '.join(sy.GROUP_NAMES)}")
    return name


def cmd_symmetries(args, out) -> int:
    elements = sy.subgroup(_group_name(args.group))
    if args.count:
        print(len(elements), file=out)
        return 0
    if args.json:
        for s in elements:
            print(s.to_json(), file=out)
        return 0
    print(f"group {args.group} order {len(elements)}", file=out)
    for s in elements:
        moved = " ".join(f"{a}>{b}" for a, b in s.perm.images if a != b) or "identity"
        print(f"{s.index:3d} {moved}", file=out)
    return 0


def cmd_orbit(args, out) -> int:
    cells = sy.orbit(_cell(args.cell), _group_name(args.group))
    if args.count:
        print(len(cells), file=out)
        return 0
    _emit_cells(cells, args, out)
    return 0


def cmd_stability(args, out) -> int:
    t, u = _label(args.t), _label(args.u)
    try:
        value = stable_value(t, u)
        k0 = stabilization_index(t, u, args.kmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"t": t.text(), "u": u.text(), "stable_value": value, "index": k0}), file=out)
    else:
        print(f"stable value: {value}", file=out)
        print(f"stabilizes from k = {k0 if k0 is not None else 'not by k_max'}", file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.sweep < 0:
        raise UsageError("--sweep must be nonnegative")
    results = run_all(args.sweep, echo=lambda line: print(line, file=out))
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="JSON output")
    common.add_argument("--batch", metavar="FILE", default=argparse.SUPPRESS, help="JSON-lines input")

    parser = argparse.ArgumentParser(prog="su3mult", description="SU(3) triple multiplicities and GL(3) LR coefficients")
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--batch", metavar="FILE", help="JSON-lines input")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", parents=[common], help="triple multiplicity c(t)")
    p.add_argument("label", nargs="?", help="l1,l2;m1,m2;n1,n2")
    p.add_argument("--explain", action="store_true")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("lr", parents=[common], help="GL(3) Littlewood-Richardson coefficient")
    p.add_argument("triple", nargs="?", help="l1,l2,l3|m1,m2,m3|n1,n2,n3")
    p.add_argument("--oracle", action="store_true", help="recompute with the tableau oracle")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("su2", parents=[common], help="SU(2) triple multiplicity")
    for name in ("l", "m", "n"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_su2)

    p = sub.add_parser("chamber", parents=[common], help="cell and chambers containing a point")
    p.add_argument("label")
    p.set_defaults(func=cmd_chamber)

    p = sub.add_parser("cells", parents=[common], help="list cells of the chamber complex")
    p.add_argument("--dim", type=int)
    p.add_argument("--count", action="store_true", help="print the f-vector")
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("chambers", parents=[common], help="list the 18 chambers")
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_chambers)

    p = sub.add_parser("rays", parents=[common], help="the nine ray generators")
    p.set_defaults(func=cmd_rays)

    p = sub.add_parser("diagram", parents=[common], help="draw a cell diagram")
    p.add_argument("--cell", help="bitmask or comma separated ray names")
    p.add_argument("--point", help="locate this label")
    p.add_argument("--chamber", help="i,j")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("symmetries", parents=[common], help="symmetry group elements")
    p.add_argument("--group", default="G")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_symmetries)

    p = sub.add_parser("orbit", parents=[common], help="orbit of a cell")
    p.add_argument("--cell", required=True, help="bitmask or comma separated ray names")
    p.add_argument("--group", default="G")
    p.add_argument("--count", action="store_true")
    p.add_argument("--diagram", action="store_true")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("stability", parents=[common], help="stable value of c(t + k u)")
    p.add_argument("t")
    p.add_argument("u")
    p.add_argument("--kmax", type=int, default=50)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    p.add_argument("--sweep", type=int, default=6, help="coordinate bound of the sweep")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"su3mult {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
