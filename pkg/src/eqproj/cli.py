"""Command-line surface: bases, products, maps, the classical dictionary,
and the verification suites.

Output is deterministic: fixed term ordering, fixed JSON key order, and all
randomized suites run from an explicit seed (the EQPROJ_SEED environment
variable overrides --seed).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .expr import (
    ExprSyntaxError,
    element_json,
    element_latex,
    element_text,
    monomial_text,
    parse_expr,
    print_element,
)
from .grading import INF
from .maps import (
    eta,
    lewis_table,
    pushforward_composite,
    restrict,
)
from .ring import (
    Element,
    FixedRingElement,
    RingError,
    RingParams,
    basis_slice,
    normalize_split,
)
from .scalar import CoefficientMode
from .verify import ALL_SUITES, run_suites


def _parse_extent(text: str):
    if text == "inf":
        return INF
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer or 'inf', got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("parameters must be nonnegative")
    return value


def _parse_range(text: str) -> range:
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected a range like -3..5, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError("empty range")
    return range(lo, hi + 1)


def _parse_pair(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected p,q (e.g. 2,1), got {text!r}")
    return _parse_extent(parts[0]), _parse_extent(parts[1])


def _params(args, p=None, q=None) -> RingParams:
    mode = CoefficientMode.parse(getattr(args, "mode", "burnside"))
    return RingParams(args.p if p is None else p, args.q if q is None else q, mode)


def _check_expr_mode(raw, mode: CoefficientMode) -> None:
    if mode is CoefficientMode.CONSTANT_Z:
        for s, _ in raw:
            if s.kappa:
                raise RingError("kappa is not allowed in constant-Z mode input")


def _fixed_text(fx: FixedRingElement) -> str:
    return element_text(fx.element)


def _emit_elements(elements: list[Element], fmt: str) -> None:
    for el in elements:
        if fmt == "json":
            print(json.dumps(element_json(el), separators=(",", ":")))
        else:
            grading = "?" if el.grading is None else el.grading.astuple()
            print(print_element(el, fmt))
            print(f"# grading: {grading}")


def cmd_basis(args) -> int:
    params = _params(args)
    planes = list(args.plane)
    if args.format == "grid":
        from .plot import render_basis_planes

        for n in planes:
            for alpha, el in basis_slice(params, n):
                (mono, _), = el.items()
                print(
                    f"{n}\t{alpha.fixed_degree}\t{alpha.total_degree}\t"
                    f"{alpha.astuple()}\t{monomial_text(mono)}"
                )
        for path in render_basis_planes(params, planes, args.outdir):
            print(f"# wrote {path}")
        return 0
    if args.format == "json":
        doc = {
            "p": "inf" if params.p == INF else params.p,
            "q": "inf" if params.q == INF else params.q,
            "mode": params.mode.value,
            "planes": [
                {
                    "n": n,
                    "basis": [
                        {
                            "grading": list(alpha.astuple()),
                            "mono": list(next(iter(el.items()))[0]),
                            "expr": element_text(el),
                        }
                        for alpha, el in basis_slice(params, n)
                    ],
                }
                for n in planes
            ],
        }
        print(json.dumps(doc, separators=(",", ":")))
        return 0
    for n in planes:
        print(f"plane {n}:")
        for alpha, el in basis_slice(params, n):
            text = element_latex(el) if args.format == "latex" else element_text(el)
            print(f"  {alpha.astuple()}\t{text}")
    return 0


def cmd_mul(args) -> int:
    params = _params(args)
    raw = parse_expr(args.expr)
    _check_expr_mode(raw, params.mode)
    _emit_elements(normalize_split(raw, params), args.format)
    return 0


def cmd_restrict(args) -> int:
    frm = _params(args, *args.frm)
    to = _params(args, *args.to)
    raw = parse_expr(args.expr)
    _check_expr_mode(raw, frm.mode)
    elements = [restrict(frm, to, el) for el in normalize_split(raw, frm)]
    _emit_elements(elements, args.format)
    return 0


def cmd_push(args) -> int:
    frm = _params(args, *args.frm)
    to = _params(args, *args.to)
    raw = parse_expr(args.expr)
    _check_expr_mode(raw, frm.mode)
    for el in normalize_split(raw, frm):
        unit, value = pushforward_composite(frm, to, el)
        print(f"unit: {unit}")
        _emit_elements([value], args.format)
    return 0


def cmd_eta(args) -> int:
    params = _params(args)
    raw = parse_expr(args.expr)
    _check_expr_mode(raw, params.mode)
    for el in normalize_split(raw, params):
        side0, side1 = eta(params, el)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "side0": element_json(side0.element),
                        "side1": element_json(side1.element),
                    },
                    separators=(",", ":"),
                )
            )
        else:
            print(f"side0: {_fixed_text(side0)}")
            print(f"side1: {_fixed_text(side1)}")
    return 0


def cmd_lewis(args) -> int:
    params = _params(args)
    for name, grading, el in lewis_table(params):
        print(f"{name}\t{grading.astuple()}\t{element_text(el)}")
    return 0


def cmd_check(args) -> int:
    seed = int(os.environ.get("EQPROJ_SEED", args.seed))
    suites = list(ALL_SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(
        suites,
        pmax=args.pmax,
        qmax=args.qmax,
        window=args.window,
        seed=seed,
        trials=args.trials,
    )
    ok = True
    for rep in reports:
        print(json.dumps(rep.to_json(), separators=(",", ":")))
        ok = ok and rep.passed
    print(f"# {'PASS' if ok else 'FAIL'} ({len(reports)} reports)")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqproj",
        description=(
            "Exact calculator for the extended-graded cohomology rings of the "
            "projective spaces P(C^p + M^q) with involution."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pq(sp, allow_inf=True):
        kind = _parse_extent if allow_inf else int
        sp.add_argument("--p", type=kind, required=True)
        sp.add_argument("--q", type=kind, required=True)

    def add_common(sp):
        sp.add_argument("--mode", choices=["burnside", "constz"], default="burnside")
        sp.add_argument(
            "--format", choices=["text", "json", "latex"], default="text"
        )

    sp = sub.add_parser("basis", help="per-plane graded bases")
    add_pq(sp, allow_inf=False)
    sp.add_argument("--plane", type=_parse_range, required=True, metavar="N0..N1")
    sp.add_argument("--mode", choices=["burnside", "constz"], default="burnside")
    sp.add_argument(
        "--format", choices=["text", "json", "latex", "grid"], default="text"
    )
    sp.add_argument("--outdir", default="figures", help="figure directory for --format grid")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("mul", help="normalize a ring expression")
    add_pq(sp)
    add_common(sp)
    sp.add_argument("--expr", required=True)
    sp.set_defaults(func=cmd_mul)

    sp = sub.add_parser("restrict", help="restriction to smaller parameters")
    sp.add_argument("--from", dest="frm", type=_parse_pair, required=True, metavar="P,Q")
    sp.add_argument("--to", type=_parse_pair, required=True, metavar="P,Q")
    add_common(sp)
    sp.add_argument("--expr", required=True)
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("push", help="push-forward to larger parameters")
    sp.add_argument("--from", dest="frm", type=_parse_pair, required=True, metavar="P,Q")
    sp.add_argument("--to", type=_parse_pair, required=True, metavar="P,Q")
    add_common(sp)
    sp.add_argument("--expr", required=True)
    sp.set_defaults(func=cmd_push)

    sp = sub.add_parser("eta", help="restriction to the fixed components")
    add_pq(sp)
    add_common(sp)
    sp.add_argument("--expr", required=True)
    sp.set_defaults(func=cmd_eta)

    sp = sub.add_parser("lewis", help="classical-generator dictionary")
    add_pq(sp, allow_inf=False)
    sp.add_argument("--mode", choices=["burnside", "constz"], default="burnside")
    sp.add_argument("--table", action="store_true", default=True)
    sp.set_defaults(func=cmd_lewis)

    sp = sub.add_parser("check", help="run verification suites")
    sp.add_argument(
        "--suite", choices=list(ALL_SUITES) + ["all"], default="all"
    )
    sp.add_argument("--pmax", type=int, default=3)
    sp.add_argument("--qmax", type=int, default=3)
    sp.add_argument("--window", type=_parse_range, default=range(-10, 11), metavar="N0..N1")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=2000)
    sp.set_defaults(func=cmd_check)

    return parser


_RANGE_FLAGS = ("--plane", "--window")


def _join_range_flags(argv: list[str]) -> list[str]:
    """Merge '--window -12..12' into '--window=-12..12' so argparse does not
    mistake the leading dash of a negative bound for an option."""
    out, i = [], 0
    while i < len(argv):
        arg = argv[i]
        if (
            arg in _RANGE_FLAGS
            and i + 1 < len(argv)
            and re.fullmatch(r"-?\d+\.\.-?\d+", argv[i + 1])
        ):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_range_flags(list(argv)))
    try:
        return args.func(args)
    except ExprSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RingError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
