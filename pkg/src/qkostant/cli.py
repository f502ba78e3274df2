"""Command-line front end.

Subcommands cover single evaluations (qpartition, partition, qmult, mult,
case), grid self-verification (verify), and CSV table dumps (table), for
both supported algebras. Exit codes: 0 success, 1 usage or domain error,
2 arithmetic overflow.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product
from typing import Sequence

from .errors import CoefficientOverflowError
from .g2_multiplicity import (
    audit_cases,
    compute_abcdef,
    multiplicity,
    qmultiplicity_closed,
    qmultiplicity_weyl_sum,
)
from .g2_partition import partition_tarski, qpartition, qpartition_bruteforce
from .qpoly import QPoly
from .rootsys import FundCoord, RootCoord, fund_to_root, root_to_fund
from .sp4 import (
    compute_case_c2,
    fund_to_root_c2,
    multiplicity_c2_closed,
    multiplicity_c2_weyl_sum,
    partition_c2_closed,
    qpartition_c2,
    qpartition_c2_bruteforce,
    root_to_fund_c2,
)

_JSON = {"separators": (",", ":"), "sort_keys": True}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this front end reserves 2 for overflow."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated integers, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected two comma-separated integers, got {text!r}") from None


def _partition_weight(args: argparse.Namespace) -> RootCoord | None:
    """Weight for the partition commands; None when off the root lattice."""
    c1, c2 = _parse_pair(args.coords)
    if args.basis == "fund":
        w = FundCoord(c1, c2)
        if args.algebra == "g2":
            return fund_to_root(w)
        return fund_to_root_c2(w)
    return RootCoord(c1, c2)


def _weight_pair(args: argparse.Namespace) -> tuple[FundCoord, FundCoord]:
    """lambda and mu for the multiplicity commands, fundamental basis."""
    lam_pair = _parse_pair(args.lam)
    mu_pair = _parse_pair(args.mu)
    if args.basis == "root":
        convert = root_to_fund if args.algebra == "g2" else root_to_fund_c2
        return convert(RootCoord(*lam_pair)), convert(RootCoord(*mu_pair))
    return FundCoord(*lam_pair), FundCoord(*mu_pair)


def _value_output(value: int, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"value": value}, **_JSON)
    return str(value)


def _poly_output(poly: QPoly, fmt: str, at_q: int | None) -> str:
    if at_q is not None:
        return _value_output(poly.eval_at(at_q), fmt)
    if fmt == "json":
        return json.dumps({"coeffs": list(poly.coeffs)}, **_JSON)
    if fmt == "latex":
        return poly.latex()
    return str(poly)


def _cmd_qpartition(args: argparse.Namespace) -> int:
    weight = _partition_weight(args)
    if weight is None:
        poly = QPoly()
    elif args.algebra == "g2":
        poly = qpartition(weight)
    else:
        poly = qpartition_c2(weight)
    print(_poly_output(poly, args.fmt, args.at_q))
    return 0


def _cmd_partition(args: argparse.Namespace) -> int:
    weight = _partition_weight(args)
    if weight is None or weight.c1 < 0 or weight.c2 < 0:
        value = 0
    elif args.algebra == "g2":
        value = partition_tarski(weight)
    else:
        value = partition_c2_closed(weight)
    print(_value_output(value, args.fmt))
    return 0


def _cmd_qmult(args: argparse.Namespace) -> int:
    lam, mu = _weight_pair(args)
    if args.algebra == "g2":
        poly = qmultiplicity_closed(lam, mu).mq
    else:
        poly = multiplicity_c2_weyl_sum(lam, mu)
    print(_poly_output(poly, args.fmt, args.at_q))
    return 0


def _cmd_mult(args: argparse.Namespace) -> int:
    lam, mu = _weight_pair(args)
    if args.algebra == "g2":
        value = multiplicity(lam, mu, method=args.method)
    else:
        if args.method == "tarski":
            raise ValueError("--method tarski applies to the g2 algebra only")
        value = multiplicity_c2_closed(lam, mu).value
    print(_value_output(value, args.fmt))
    return 0


def _cmd_case(args: argparse.Namespace) -> int:
    lam, mu = _weight_pair(args)
    if args.algebra == "g2":
        case = compute_abcdef(lam, mu)
        payload = {
            "algebra": "g2",
            "lambda": [lam.m, lam.n],
            "mu": [mu.m, mu.n],
            "a": case.a,
            "b": case.b,
            "c": case.c,
            "d": case.d,
            "e": case.e,
            "f": case.f,
            "in_n": list(case.in_n),
            "case": case.case_label,
        }
        text = (
            f"case {case.case_label}: a={case.a} b={case.b} c={case.c}"
            f" d={case.d} e={case.e} f={case.f}"
        )
    else:
        c2 = compute_case_c2(lam, mu)
        payload = {
            "algebra": "c2",
            "lambda": [lam.m, lam.n],
            "mu": [mu.m, mu.n],
            "a": c2.a,
            "two_b": c2.two_b,
            "c": c2.c,
            "two_d": c2.two_d,
            "in_n": [c2.a_in_n, c2.b_in_n, c2.c_in_n, c2.d_in_n],
            "case": c2.case_label,
        }
        text = (
            f"case {c2.case_label}: a={c2.a} two_b={c2.two_b}"
            f" c={c2.c} two_d={c2.two_d}"
        )
    print(json.dumps(payload, **_JSON) if args.fmt == "json" else text)
    return 0


def _verify_g2(grid_max: int) -> dict:
    pairs = list(product(range(grid_max + 1), repeat=2))
    quads = list(product(range(grid_max + 1), repeat=4))
    checks = []

    mismatches = sum(
        1
        for m, n in pairs
        if qpartition(RootCoord(m, n)) != qpartition_bruteforce(RootCoord(m, n))
    )
    checks.append(
        {"name": "qpartition_vs_bruteforce", "cases": len(pairs), "mismatches": mismatches}
    )

    mismatches = sum(
        1
        for m, n in pairs
        if qpartition(RootCoord(m, n)).eval_at_one() != partition_tarski(RootCoord(m, n))
    )
    checks.append(
        {"name": "tarski_vs_qpartition_at_one", "cases": len(pairs), "mismatches": mismatches}
    )

    mismatches = 0
    for m, n, x, y in quads:
        lam, mu = FundCoord(m, n), FundCoord(x, y)
        if qmultiplicity_closed(lam, mu).mq != qmultiplicity_weyl_sum(lam, mu):
            mismatches += 1
    checks.append(
        {"name": "qmult_closed_vs_weyl_sum", "cases": len(quads), "mismatches": mismatches}
    )

    mismatches = sum(
        1
        for m, n, x, y in quads
        if multiplicity(FundCoord(m, n), FundCoord(x, y), "qpoly")
        != multiplicity(FundCoord(m, n), FundCoord(x, y), "tarski")
    )
    checks.append(
        {"name": "multiplicity_qpoly_vs_tarski", "cases": len(quads), "mismatches": mismatches}
    )

    audit = audit_cases(grid_max)
    checks.append(
        {"name": "case_audit", "cases": len(quads), "mismatches": len(audit.counterexamples)}
    )
    return {"algebra": "g2", "grid_max": grid_max, "checks": checks}


def _verify_c2(grid_max: int) -> dict:
    pairs = list(product(range(grid_max + 1), repeat=2))
    quads = list(product(range(grid_max + 1), repeat=4))
    checks = []

    mismatches = sum(
        1
        for m, n in pairs
        if qpartition_c2(RootCoord(m, n)) != qpartition_c2_bruteforce(RootCoord(m, n))
    )
    checks.append(
        {"name": "qpartition_vs_bruteforce", "cases": len(pairs), "mismatches": mismatches}
    )

    mismatches = sum(
        1
        for m, n in pairs
        if partition_c2_closed(RootCoord(m, n)) != qpartition_c2(RootCoord(m, n)).eval_at_one()
    )
    checks.append(
        {"name": "partition_closed_vs_qpartition_at_one", "cases": len(pairs), "mismatches": mismatches}
    )

    mismatches = 0
    for m, n, x, y in quads:
        lam, mu = FundCoord(m, n), FundCoord(x, y)
        if multiplicity_c2_closed(lam, mu).value != multiplicity_c2_weyl_sum(lam, mu).eval_at_one():
            mismatches += 1
    checks.append(
        {"name": "mult_closed_vs_weyl_sum_at_one", "cases": len(quads), "mismatches": mismatches}
    )

    mismatches = 0
    for m, n, x, y in quads:
        lam, mu = FundCoord(m, n), FundCoord(x, y)
        if (m - x) % 2:
            case = compute_case_c2(lam, mu)
            if case.b_in_n or case.d_in_n or multiplicity_c2_weyl_sum(lam, mu):
                mismatches += 1
    checks.append(
        {"name": "odd_parity_vanishing", "cases": len(quads), "mismatches": mismatches}
    )
    return {"algebra": "c2", "grid_max": grid_max, "checks": checks}


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max < 0:
        raise ValueError("--max must be nonnegative")
    report = _verify_g2(args.max) if args.algebra == "g2" else _verify_c2(args.max)
    if args.fmt == "json":
        print(json.dumps(report, **_JSON))
    else:
        for check in report["checks"]:
            print(f"{check['name']}: {check['cases']} cases, {check['mismatches']} mismatches")
    return 0 if all(check["mismatches"] == 0 for check in report["checks"]) else 1


def _table_lines(algebra: str, grid_max: int) -> list[str]:
    lines = []
    if algebra == "g2":
        lines.append("m,n,x,y,a,b,c,d,e,f,case,mq_coeffs,m_at_1")
        for m, n, x, y in product(range(grid_max + 1), repeat=4):
            res = qmultiplicity_closed(FundCoord(m, n), FundCoord(x, y))
            case = res.case
            coeffs = "|".join(str(c) for c in res.mq.coeffs)
            lines.append(
                f"{m},{n},{x},{y},{case.a},{case.b},{case.c},{case.d},{case.e},{case.f},"
                f"{case.case_label},{coeffs},{res.m_at_one}"
            )
    else:
        lines.append("m,n,x,y,a,two_b,c,two_d,case,mq_coeffs,m_at_1")
        for m, n, x, y in product(range(grid_max + 1), repeat=4):
            lam, mu = FundCoord(m, n), FundCoord(x, y)
            case = compute_case_c2(lam, mu)
            coeffs = "|".join(str(c) for c in multiplicity_c2_weyl_sum(lam, mu).coeffs)
            lines.append(
                f"{m},{n},{x},{y},{case.a},{case.two_b},{case.c},{case.two_d},"
                f"{case.case_label},{coeffs},{multiplicity_c2_closed(lam, mu).value}"
            )
    return lines


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max < 0:
        raise ValueError("--max must be nonnegative")
    data = "\n".join(_table_lines(args.algebra, args.max)) + "\n"
    if args.output in (None, "-"):
        sys.stdout.write(data)
    else:
        with open(args.output, "w", encoding="ascii", newline="") as handle:
            handle.write(data)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="qkostant", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--algebra", choices=("g2", "c2"), default="g2")
        p.add_argument(
            "--format", choices=("text", "json", "latex"), default="text", dest="fmt"
        )

    p = sub.add_parser("qpartition", help="q-analog of the partition count of one weight")
    p.add_argument("coords", help="weight as 'c1,c2' in the root basis (see --basis)")
    p.add_argument("--basis", choices=("root", "fund"), default="root")
    p.add_argument("--at-q", dest="at_q", type=int, default=None, metavar="V",
                   help="evaluate the polynomial at the integer V")
    common(p)
    p.set_defaults(handler=_cmd_qpartition)

    p = sub.add_parser("partition", help="partition count of one weight (closed form)")
    p.add_argument("coords", help="weight as 'c1,c2' in the root basis (see --basis)")
    p.add_argument("--basis", choices=("root", "fund"), default="root")
    common(p)
    p.set_defaults(handler=_cmd_partition)

    for name, handler, extra in (
        ("qmult", _cmd_qmult, "q-multiplicity polynomial of mu in L(lambda)"),
        ("mult", _cmd_mult, "classical multiplicity of mu in L(lambda)"),
        ("case", _cmd_case, "case integers and selected formula for (lambda, mu)"),
    ):
        p = sub.add_parser(name, help=extra)
        p.add_argument("--lambda", dest="lam", required=True, metavar="M,N",
                       help="highest weight in the fundamental basis (see --basis)")
        p.add_argument("--mu", required=True, metavar="X,Y",
                       help="target weight in the fundamental basis (see --basis)")
        p.add_argument("--basis", choices=("fund", "root"), default="fund")
        if name == "qmult":
            p.add_argument("--at-q", dest="at_q", type=int, default=None, metavar="V",
                           help="evaluate the polynomial at the integer V")
        if name == "mult":
            p.add_argument("--method", choices=("qpoly", "tarski"), default="qpoly")
        common(p)
        p.set_defaults(handler=handler)

    p = sub.add_parser("verify", help="run the oracle-equivalence grids")
    p.add_argument("--max", type=int, required=True, metavar="N",
                   help="grid bound: pairs in [0,N]^2, tuples in [0,N]^4")
    common(p)
    p.set_defaults(handler=_cmd_verify, fmt="json")

    p = sub.add_parser("table", help="CSV of case data and multiplicities on a grid")
    p.add_argument("--max", type=int, required=True, metavar="N",
                   help="one row per (m,n,x,y) in [0,N]^4, lexicographic")
    p.add_argument("--output", "-o", default=None, metavar="PATH",
                   help="output file; '-' or omitted writes to stdout")
    common(p)
    p.set_defaults(handler=_cmd_table)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return 0 if exc.code is None else 1
    try:
        return args.handler(args)
    except CoefficientOverflowError as exc:
        print(f"qkostant: arithmetic overflow: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"qkostant: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
