"""Command-line front end: verification suites, single sums, and census sweeps.

Exit codes: 0 full pass, 1 any verification failure, 2 invalid parameters.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

from . import suites
from .charsum import (
    bounds_check,
    ik_formula_scaled,
    inverted_kloosterman_brute,
)
from .cyclo import embed_complex, lower_conductor
from .errors import BudgetExceeded, IKDegError, InvalidParameters
from .ff import Field, get_field, is_prime
from .galois import degree_of, min_poly
from .padic import run_case_analysis


@dataclass
class CensusRecord:
    p: int
    k_ext: int
    q: int
    n: int
    b: str
    degree: int
    predicted_degree_bound: int
    degree_matches: object  # True | False | "n/a"
    bound1_lhs: float
    bound1_rhs: float
    bound2_lhs: float | None
    bound2_rhs: float | None
    case_label: str
    predicted_val: int | None
    observed_val: int | None


CSV_FIELDS = [
    "p",
    "k_ext",
    "q",
    "n",
    "b",
    "degree",
    "predicted_degree_bound",
    "degree_matches",
    "bound1_lhs",
    "bound1_rhs",
    "bound2_lhs",
    "bound2_rhs",
    "case_label",
    "predicted_val",
    "observed_val",
]


def _fmt_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def census_record(F: Field, n: int, b) -> CensusRecord:
    p = F.p
    sv = ik_formula_scaled(F, n, b)
    z_p = lower_conductor(sv.value, p)
    degree = degree_of(z_p)
    bound = (p - 1) // gcd(n + 1, p - 1)
    matches = (degree == bound) if F.k == 1 else "n/a"
    report = bounds_check(F, n, b, sv)
    case_label, pred, obs = "", None, None
    if F.k == 1:
        if (n + 1) % (p - 1 if p > 2 else 1) == 0 or p == 2:
            case_label = "trivial"
        else:
            rep = run_case_analysis(p, n, b.coeffs[0], F.generator.coeffs[0])
            case_label = rep.case_label
            pred, obs = rep.predicted_valuation, rep.observed_valuation
    return CensusRecord(
        p=p,
        k_ext=F.k,
        q=F.q,
        n=n,
        b=b.serialize(),
        degree=degree,
        predicted_degree_bound=bound,
        degree_matches=matches,
        bound1_lhs=report.bound1_lhs_max,
        bound1_rhs=report.embeddings[0].bound1_rhs,
        bound2_lhs=report.bound2_lhs_max,
        bound2_rhs=report.embeddings[0].bound2_rhs,
        case_label=case_label,
        predicted_val=pred,
        observed_val=obs,
    )


def _emit(records, fmt, out):
    if fmt == "csv":
        lines = [",".join(CSV_FIELDS)]
        for r in records:
            lines.append(",".join(_fmt_cell(getattr(r, f)) for f in CSV_FIELDS))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        rows = [
            {f: (getattr(r, f) if not isinstance(getattr(r, f), float) else float(f"{getattr(r, f):.12g}")) for f in CSV_FIELDS}
            for r in records
        ]
        text = json.dumps(rows, indent=2, sort_keys=True) + "\n"
    else:  # table
        cells = [[_fmt_cell(getattr(r, f)) for f in CSV_FIELDS] for r in records]
        widths = [
            max(len(CSV_FIELDS[i]), *(len(row[i]) for row in cells)) if cells else len(CSV_FIELDS[i])
            for i in range(len(CSV_FIELDS))
        ]
        lines = ["  ".join(f.ljust(w) for f, w in zip(CSV_FIELDS, widths))]
        for row in cells:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
        text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_b(F: Field, raw: str):
    if ":" in raw:
        coords = [int(c) for c in raw.split(":")]
    else:
        coords = [int(raw)] + [0] * (F.k - 1)
    b = F.elt(coords)
    if b.is_zero():
        raise InvalidParameters("b must be nonzero")
    return b


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("IKDEG_THREADS")
    return int(env) if env else 1


def cmd_verify(args) -> int:
    if args.suite == "all":
        ok, lines = suites.run_all()
    elif args.suite == "identity":
        ok, lines = suites.identity_suite(args.p, args.n, args.budget)
    elif args.suite == "degree":
        if args.p is not None and not is_prime(args.p):
            raise InvalidParameters(f"{args.p} is not prime")
        p_max = args.p if args.p is not None else (args.p_max or suites.DEGREE_P_MAX)
        n_max = args.n if args.n is not None else (args.n_max or suites.DEGREE_N_MAX)
        ok, lines = suites.degree_suite(p_max, n_max)
    elif args.suite == "stickelberger":
        primes = (
            (args.p,)
            if args.p is not None
            else tuple(q for q in suites.STICKELBERGER_PRIMES if q <= (args.p_max or 19))
        )
        ok, lines = suites.stickelberger_suite(primes, args.precision)
    elif args.suite == "cases":
        ok, lines = suites.cases_suite(args.precision)
    else:  # bounds
        ok, lines = suites.bounds_suite(budget=args.budget)
    for line in lines:
        print(line)
    return 0 if ok else 1


def cmd_census(args) -> int:
    p_lo = args.p or 3
    p_hi = args.p_max or p_lo
    n_lo = args.n or 1
    n_hi = args.n_max or n_lo
    k = args.k or 1
    primes = [p for p in range(p_lo, p_hi + 1) if is_prime(p)]
    if not primes or n_hi < n_lo:
        raise InvalidParameters("empty parameter range")
    fields = [get_field(p, k) for p in primes]
    work = [
        (F, n, F.pow_of_generator(j))
        for F in fields
        for n in range(n_lo, n_hi + 1)
        for j in range(F.q - 1)
    ]
    threads = _threads(args)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda item: census_record(*item), work))
    else:
        records = [census_record(*item) for item in work]
    _emit(records, args.format, args.out)
    return 0


def cmd_sum(args) -> int:
    F = get_field(args.p, args.k or 1)
    b = _parse_b(F, args.b)
    n = args.n
    q = F.q
    exact_p = None
    code = 0
    if args.path in ("brute", "both"):
        brute = inverted_kloosterman_brute(F, n, b, args.budget)
        print(f"brute IK_{n}({q}, {b.serialize()}) = {json.dumps(brute.value.to_dict())}")
        exact_p = brute.value
    if args.path in ("formula", "both"):
        sv = ik_formula_scaled(F, n, b)
        print(
            f"formula {q * (q - 1)}*IK_{n}({q}, {b.serialize()}) = "
            f"{json.dumps(sv.value.reduced().to_dict())}"
        )
        z_p = lower_conductor(sv.value, F.p)
        if args.path == "both":
            agree = sv.scale * exact_p == z_p
            print(f"paths agree: {agree}")
            if not agree:
                code = 1
        if exact_p is None:
            exact_p = z_p  # scaled; degree and embeddings/scale reported below
            scale = sv.scale
        else:
            scale = 1
    else:
        scale = 1
    for j in range(1, F.p) if F.p > 2 else [1]:
        c, err = embed_complex(exact_p, j)
        c /= scale
        print(f"embedding j={j}: {c.real:.12g}{c.imag:+.12g}i (err <= {err:.3g})")
    deg = degree_of(exact_p)
    poly = min_poly(exact_p)
    label = "IK" if scale == 1 else f"{scale}*IK"
    print(f"degree({label}) = {deg}")
    print(f"minpoly({label}) = {list(poly.coeffs)}")
    return code


def build_parser():
    ap = argparse.ArgumentParser(prog="ikdeg", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int)
    common.add_argument("--p-max", type=int, dest="p_max")
    common.add_argument("--k", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int, dest="n_max")
    common.add_argument("--b", type=str)
    common.add_argument("--budget", type=int, default=2_000_000)
    common.add_argument("--precision", type=int)
    common.add_argument("--threads", type=int)
    common.add_argument("--format", choices=["csv", "json", "table"], default="csv")
    common.add_argument("--out", type=str)

    pv = sub.add_parser("verify", parents=[common], help="run a verification suite")
    pv.add_argument(
        "suite", choices=["identity", "degree", "stickelberger", "cases", "bounds", "all"]
    )
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("census", parents=[common], help="parameter-sweep census")
    pc.set_defaults(func=cmd_census)

    ps = sub.add_parser("sum", parents=[common], help="one inverted Kloosterman sum")
    ps.add_argument("--path", choices=["brute", "formula", "both"], default="formula")
    ps.set_defaults(func=cmd_sum)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "sum":
            if args.p is None or args.n is None or args.b is None:
                raise InvalidParameters("sum needs --p, --n, and --b")
        if args.command == "census" and args.p is None:
            raise InvalidParameters("census needs --p")
        return args.func(args)
    except (InvalidParameters, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 2
    except IKDegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
