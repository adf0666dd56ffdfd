"""Command-line front end.

Subcommands: ``eval`` (invariants of braid closures), ``oracle``
(closed-form reference values), ``recur`` (verify or guess recurrences).
Exit codes: 0 success, 1 verification failure / no operator found,
2 usage error.  Identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidError, ColoredBraid, closure_info, parse_braid
from .invariants import (Partition, adjust_framing, homfly_columns,
                         homfly_partition, torus_reference,
                         trefoil_reference)
from .pbw import Evaluator
from .recurrence import OperatorError, guess, parse_operator
from .rings import XPoly, is_integral_laurent


class UsageError(Exception):
    pass


def _parse_colors(text: str) -> list[tuple[str, object]]:
    """Tokens like ``e1``, ``h2``, ``p2,1`` (whitespace separated)."""
    out: list[tuple[str, object]] = []
    for tok in text.split():
        kind = tok[0]
        if kind == "e" or kind == "h":
            try:
                out.append((kind, int(tok[1:])))
            except ValueError:
                raise UsageError(f"bad color token {tok!r}") from None
        elif kind == "p":
            try:
                parts = tuple(int(s) for s in tok[1:].split(","))
                out.append(("p", Partition(parts)))
            except ValueError as e:
                raise UsageError(f"bad partition color {tok!r}: {e}") from None
        else:
            raise UsageError(f"bad color token {tok!r} (want e<k>, h<k> or p<parts>)")
    return out


def _colored(args) -> tuple[ColoredBraid, list[tuple[str, object]]]:
    braid = parse_braid(args.braid, args.strands)
    colors = _parse_colors(args.colors)
    ints = [c if kind != "p" else 0 for kind, c in colors]
    cb = ColoredBraid(braid, ints)
    return cb, colors


def _eval_value(args) -> tuple[XPoly, ColoredBraid]:
    cb, colors = _colored(args)
    kinds = {k for k, _ in colors}
    trace = (lambda s: print(s, file=sys.stderr)) if args.trace else None
    if "p" in kinds:
        if colors[0][0] != "p":
            raise UsageError("partition colors are supported on the first component only")
        if sum(1 for k, _ in colors if k == "p") > 1:
            raise UsageError("at most one partition-colored component is supported")
        if any(k == "e" for k, _ in colors[1:]):
            raise UsageError(
                "alongside a partition color the other components take h<k> colors")
        lam: Partition = colors[0][1]
        rest = tuple(c for _, c in colors[1:])
        cb = ColoredBraid(cb.braid, (0,) + rest)
        ell = max(1, len(lam))
        value = homfly_partition(cb, lam, ell, jobs=args.jobs)
        row_like = True
    elif kinds == {"e"} or not kinds:
        ev = Evaluator(2 * cb.braid.strands, trace=trace)
        value = homfly_columns(cb, jobs=args.jobs, evaluator=ev)
        row_like = False
    elif kinds == {"h"}:
        ev = Evaluator(2 * cb.braid.strands, trace=trace)
        value = homfly_columns(cb, jobs=args.jobs, evaluator=ev).q_bar()
        row_like = True
    else:
        raise UsageError("mixed e and h colors on one link are not supported")
    if args.framing == "zero":
        if "p" in kinds:
            raise UsageError("zero framing is not supported with partition colors")
        for i, (kind, a) in enumerate(colors):
            delta = -cb.closure.linking[i][i]
            value = adjust_framing(value, a, delta, row=row_like)
    return value, cb


def _emit(value, meta: dict, args) -> None:
    if args.specialize is not None:
        value = value.subst_x_eq_qn(args.specialize)
        meta["specialize"] = args.specialize
        ok, _ = is_integral_laurent(value)
        meta["integral"] = ok
    if args.format == "json":
        body = value.json_obj()
        print(json.dumps({"value": body, "meta": meta}, separators=(", ", ": ")))
    else:
        print(value.text())


def _cmd_eval(args) -> int:
    value, cb = _eval_value(args)
    meta = {"kind": "eval", **cb.json_obj(), "color_spec": args.colors.split(),
            "framing": args.framing}
    _emit(value, meta, args)
    return 0


def _cmd_oracle(args) -> int:
    if args.which == "trefoil":
        if args.a is None or args.a < 0:
            raise UsageError("oracle trefoil needs --a <nonnegative int>")
        value = trefoil_reference(args.a)
        meta = {"kind": "oracle-trefoil", "a": args.a}
    else:
        if args.s is None or args.m is None or args.m < 0 or args.s < 1:
            raise UsageError("oracle torus needs --s <positive int> and --m <nonnegative int>")
        value = torus_reference(args.s, args.m, zero_framed=args.zero_framed)
        meta = {"kind": "oracle-torus", "s": args.s, "m": args.m,
                "zero_framed": args.zero_framed}
    _emit(value, meta, args)
    return 0


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad range {text!r}; want lo:hi") from None
    if hi < lo or lo < 0:
        raise UsageError(f"bad range {text!r}")
    return lo, hi


def _build_sequence(args, lo: int, hi: int) -> dict[int, XPoly]:
    """W(family_m) for m in [lo, hi]; every component gets the color m."""
    braid = parse_braid(args.braid, args.strands)
    ncomp = closure_info(braid).component_count
    out: dict[int, XPoly] = {}
    for m in range(lo, hi + 1):
        cb = ColoredBraid(braid, (m,) * ncomp)
        v = homfly_columns(cb)
        if args.family == "h":
            v = v.q_bar()
        if args.framing == "zero":
            for i in range(ncomp):
                delta = -cb.closure.linking[i][i]
                v = adjust_framing(v, m, delta, row=args.family == "h")
        out[m] = v
    return out


def _cmd_recur(args) -> int:
    lo, hi = _parse_range(args.m_range)
    if args.action == "verify":
        if args.operator_file:
            with open(args.operator_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        elif args.operator_text:
            text = args.operator_text
        else:
            raise UsageError("recur verify needs --operator FILE or --operator-text STR")
        op = parse_operator(text)
        f = _build_sequence(args, lo, hi + op.order)
        bad = [m for m in range(lo, hi + 1) if not op.apply(f, m).is_zero()]
        if bad:
            print(f"FAIL at m={bad[0]}")
            return 1
        print(f"PASS on m in [{lo},{hi}]")
        return 0
    f = _build_sequence(args, lo, hi)
    op = guess(f, args.max_order, args.max_m_degree)
    if op is None:
        print("no operator found within the given bounds")
        return 1
    print(op.text())
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="homflypt",
        description="Exact colored HOMFLYPT invariants of braid closures in Q(q)[x^±1].")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--specialize", type=int, default=None, metavar="N",
                       help="substitute x = q^N and print the Q(q) value")
        p.add_argument("--format", choices=("text", "json"), default="text")

    pe = sub.add_parser("eval", help="invariant of a colored braid closure")
    pe.add_argument("--strands", type=int, required=True)
    pe.add_argument("--braid", default="",
                    help="whitespace-separated signed generators, bottom to top")
    pe.add_argument("--colors", required=True,
                    help="per-component colors ordered by smallest strand: "
                         "e<k> (column), h<k> (row) or p<l1,l2,...> (partition, "
                         "first component only)")
    pe.add_argument("--framing", choices=("blackboard", "zero"), default="blackboard")
    pe.add_argument("--jobs", type=int, default=1)
    pe.add_argument("--trace", action="store_true",
                    help="log rewrite steps to stderr")
    common(pe)

    po = sub.add_parser("oracle", help="closed-form reference values")
    po.add_argument("which", choices=("trefoil", "torus"))
    po.add_argument("--a", type=int, default=None, help="trefoil column color")
    po.add_argument("--s", type=int, default=None, help="torus braid exponent")
    po.add_argument("--m", type=int, default=None, help="torus row color")
    po.add_argument("--zero-framed", action="store_true")
    common(po)

    pr = sub.add_parser("recur", help="verify or guess recurrences")
    pr.add_argument("action", choices=("verify", "guess"))
    pr.add_argument("--strands", type=int, required=True)
    pr.add_argument("--braid", default="")
    pr.add_argument("--family", choices=("e", "h"), default="h",
                    help="color family for the sequence index")
    pr.add_argument("--framing", choices=("blackboard", "zero"), default="blackboard")
    pr.add_argument("--m-range", required=True, metavar="LO:HI",
                    help="verify window / guess data window")
    pr.add_argument("--operator", dest="operator_file", default=None)
    pr.add_argument("--operator-text", default=None)
    pr.add_argument("--max-order", type=int, default=2)
    pr.add_argument("--max-m-degree", type=int, default=2)

    args = ap.parse_args(argv)
    try:
        if args.cmd == "eval":
            return _cmd_eval(args)
        if args.cmd == "oracle":
            return _cmd_oracle(args)
        return _cmd_recur(args)
    except (UsageError, BraidError, OperatorError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
