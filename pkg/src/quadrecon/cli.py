"""Command-line pipelines: gen | punch | reconstruct, plus check/analyze/oracle.

Exit status: 0 success or pass, 1 fail/stuck/contradiction/non-unique,
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .algebra import GroupSpecError, cayley_matrix_of, make_group, verify_group
from .oracle import DEFAULT_BUDGET, CompletionQuery, complete_all, serialize_completions
from .reconstructor import Mode, analyze_hole, reconstruct
from .tables import (Cell, GridParseError, PartialMatrix, check_quadrangle_criterion,
                     is_balanced_cayley, is_cayley, is_latin, parse_grid, punch,
                     serialize_grid)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> PartialMatrix:
    if path == "-":
        return parse_grid(sys.stdin.read(), "<stdin>")
    try:
        with open(path) as f:
            return parse_grid(f.read(), path)
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _cell_list(text: str) -> list[Cell]:
    out = []
    for k, part in enumerate(p for p in text.split(";") if p.strip()):
        try:
            r, c = (int(x) for x in part.split(","))
        except ValueError:
            raise UsageError(f"bad cell #{k} {part!r}; expected r,c") from None
        out.append(Cell(r, c))
    return out


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def cmd_gen(args) -> tuple[str, int]:
    G = make_group(args.group)
    rows = _int_list(args.rows) if args.rows else None
    cols = _int_list(args.cols) if args.cols else None
    return serialize_grid(cayley_matrix_of(G, rows, cols)), EXIT_OK


def cmd_punch(args) -> tuple[str, int]:
    p = _read(args.input)
    if not p.is_full:
        raise UsageError("punch expects a full matrix")
    m = p.to_matrix()
    n = m.n
    if args.cells is not None:
        holes = _cell_list(args.cells)
        note = "# cells=" + ";".join(f"{r},{c}" for r, c in holes)
    else:
        if not 0 <= args.holes <= n * n:
            raise UsageError(f"--holes must be in [0, {n * n}]")
        cells = [Cell(i, j) for i in range(n) for j in range(n)]
        holes = random.Random(args.seed).sample(cells, args.holes)
        note = f"# seed={args.seed} holes={args.holes}"
    for h in holes:
        if not (0 <= h.row < n and 0 <= h.col < n):
            raise UsageError(f"cell {h.row},{h.col} outside a {n}x{n} grid")
    return note + "\n" + serialize_grid(punch(m, holes)), EXIT_OK


def cmd_reconstruct(args) -> tuple[str, int]:
    p = _read(args.input)
    holes = p.holes
    if args.order == "given":
        if args.sequence is None:
            raise UsageError("--order given requires --sequence")
        order = _cell_list(args.sequence)
        if len(order) != len(set(order)) or set(order) != set(holes):
            raise UsageError("--sequence must list every hole exactly once")
    elif args.order == "random":
        order = list(holes)
        random.Random(args.seed).shuffle(order)
    else:
        order = list(holes)
    rep = reconstruct(p, order, Mode.parse(args.mode), paranoid=args.paranoid)
    report = rep.to_dict()
    report.update(order_policy=args.order, seed=args.seed, paranoid=args.paranoid)
    out = serialize_grid(rep.grid) + "---\n" + _dump(report)
    return out, EXIT_OK if rep.complete else EXIT_FAIL


def cmd_check(args) -> tuple[str, int]:
    p = _read(args.input)
    if args.what == "latin":
        verdict = is_latin(p).to_dict()
    else:
        if not p.is_full:
            raise UsageError(f"--what {args.what} needs a matrix without holes")
        if args.what == "quadrangle":
            verdict = check_quadrangle_criterion(p).to_dict()
        elif args.what == "cayley":
            verdict = is_cayley(p).to_dict()
        elif args.what == "balanced":
            verdict = is_balanced_cayley(p).to_dict()
        else:
            op = p.cells
            if args.identity is not None:
                e = args.identity
            else:
                n = p.n
                e = next((x for x in range(n) if list(op[x]) == list(range(n))), 0)
            verdict = verify_group(op, e).to_dict()
    verdict["what"] = args.what
    return _dump(verdict), EXIT_OK if verdict["pass"] else EXIT_FAIL


def cmd_analyze(args) -> tuple[str, int]:
    p = _read(args.input)
    truth = _read(args.truth)
    if not truth.is_full:
        raise UsageError("--truth must be a full matrix")
    if truth.n != p.n:
        raise UsageError(f"--truth has order {truth.n}, input has {p.n}")
    (d,) = _cell_list(args.cell) or [None]
    if d is None or p[d] is not None:
        raise UsageError(f"--cell {args.cell} is not a hole of the input")
    a = analyze_hole(truth.to_matrix(), p.holes, d)
    return _dump(a.to_dict()), EXIT_OK


def cmd_oracle(args) -> tuple[str, int]:
    p = _read(args.input)
    mode = {"latin": "latin", "cayley": "cayley", "balanced": "balanced_cayley",
            "table": "labeled_table"}[args.mode]
    index = {s: i for i, s in enumerate(p.universe)}

    def labels(text, what):
        if text is None:
            raise UsageError(f"--mode table requires --{what}")
        try:
            return [index[s] for s in text.split(",")]
        except KeyError as e:
            raise UsageError(f"--{what}: unknown symbol {e.args[0]!r}") from None

    extra = {}
    if mode == "labeled_table":
        extra = {"headline": labels(args.headline, "headline"),
                 "sideline": labels(args.sideline, "sideline")}
    cs = complete_all(CompletionQuery(p, mode, args.limit, args.budget, **extra))
    return serialize_completions(cs), EXIT_OK if cs.unique else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadrecon", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, func, help, takes_input=True):
        sp = sub.add_parser(name, help=help)
        if takes_input:
            sp.add_argument("input", nargs="?", default="-", help="grid file, '-' for stdin")
        sp.add_argument("-o", "--output", default="-")
        sp.set_defaults(func=func)
        return sp

    sp = add("gen", cmd_gen, "emit the Cayley matrix of a catalog group", takes_input=False)
    sp.add_argument("--group", required=True, help="c<n>, d<k>, s<k>, q8, prod:<spec>,<spec>")
    sp.add_argument("--rows", help="row enumeration, comma separated")
    sp.add_argument("--cols", help="column enumeration, comma separated")

    sp = add("punch", cmd_punch, "delete cells from a full matrix")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--holes", type=int, help="number of random holes")
    g.add_argument("--cells", help='explicit holes "r,c;r,c;..."')
    sp.add_argument("--seed", type=int, default=0)

    sp = add("reconstruct", cmd_reconstruct, "fill holes by the quadrangle criterion")
    sp.add_argument("--order", choices=["given", "row-major", "random"], default="row-major")
    sp.add_argument("--sequence", help='hole order for --order given, "r,c;r,c;..."')
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--mode", choices=["quadrangle", "quadrangle+latin"], default="quadrangle")
    sp.add_argument("--paranoid", action="store_true",
                    help="scan every witness and report disagreement")

    sp = add("check", cmd_check, "structural checks")
    sp.add_argument("--what", required=True,
                    choices=["latin", "quadrangle", "cayley", "balanced", "group"])
    sp.add_argument("--identity", type=int, help="claimed identity for --what group")

    sp = add("analyze", cmd_analyze, "hole partition and quadrangle counts")
    sp.add_argument("--cell", required=True, help="the distinguished hole r,c")
    sp.add_argument("--truth", required=True, help="full ground-truth matrix")

    sp = add("oracle", cmd_oracle, "enumerate completions by brute force")
    sp.add_argument("--mode", choices=["latin", "cayley", "balanced", "table"], default="cayley")
    sp.add_argument("--limit", type=int, default=None)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--headline", help="column labels, comma separated symbols")
    sp.add_argument("--sideline", help="row labels, comma separated symbols")
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        out, status = args.func(args)
    except (UsageError, GridParseError, GroupSpecError, ValueError) as e:
        print(f"quadrecon {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    if args.output == "-":
        sys.stdout.write(out)
    else:
        with open(args.output, "w") as f:
            f.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
