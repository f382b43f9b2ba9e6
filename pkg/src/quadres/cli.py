"""Command-line sweeps: ``quadres verify`` and ``quadres table``.

Exit status of ``verify`` is 0 when every check passes, 2 when some check
fails, and 1 on a usage or internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import counting, quadfield, verify
from .modint import primes_in, residue_table, two_squares

EXIT_OK, EXIT_ERROR, EXIT_FALSE = 0, 1, 2

REPORT_FIELDS = ["claim", "p", "params", "lhs", "rhs", "pass", "note"]
TABLE_FIELDS = [
    "p", "p_mod_8", "s", "t", "h_imag", "h_real", "eps_a", "eps_b",
    "count_below_quarter", "x", "y",
]

# (residue, modulus, smallest p) of each claim's domain, and which parameters it takes
CLAIM_DOMAINS = {
    "thm_1_1_i": ((1, 8), 17, ("a",)),
    "thm_1_1_ii": ((5, 8), 5, ("a",)),
    "plus_3mod4": ((3, 4), 7, ("a",)),
    "thm_1_2": ((1, 4), 5, ("a",)),
    "thm_1_3": ((3, 4), 3, ("delta",)),
    "thm_3_1": ((3, 4), 3, ("a", "b")),
    "lem_4_1": ((3, 4), 7, ("a",)),
    "remark_1_1": ((1, 4), 5, ()),
    "lem_5_1": ((3, 4), 7, ()),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def parse_value_set(spec: str) -> tuple[str, int]:
    if spec == "all":
        return ("all", 0)
    if spec.startswith("sample:"):
        try:
            n = int(spec.split(":", 1)[1])
        except ValueError:
            raise UsageError(f"bad sample size in {spec!r}") from None
        if n < 1:
            raise UsageError(f"sample size must be positive in {spec!r}")
        return ("sample", n)
    raise UsageError(f"expected 'all' or 'sample:N', got {spec!r}")


def sample_values(p: int, how: tuple[str, int], salt: str = "a") -> list[int]:
    """Parameter values in [1, p-1] for prime p.

    ``sample:N`` starts from 1, 2, the smallest non-residue and p-1, then
    adds pseudorandom values from a generator seeded by (p, salt).
    """
    kind, n = how
    if kind == "all":
        return list(range(1, p))
    picked = []
    for v in (1, 2, residue_table(p).smallest_nonresidue(), p - 1):
        if v not in picked and len(picked) < n:
            picked.append(v)
    n = min(n, p - 1)
    rng = random.Random(f"{p}:{salt}")
    while len(picked) < n:
        v = rng.randint(1, p - 1)
        if v not in picked:
            picked.append(v)
    return sorted(picked)


def build_tasks(claims, pmin, pmax, a_set, b_set, deltas):
    tasks = []
    for claim in claims:
        (r, m), p_low, takes = CLAIM_DOMAINS[claim]
        found = []
        for p in primes_in(max(pmin, p_low), pmax, (r, m)):
            if "delta" in takes:
                found += [(claim, p, {"delta": d}) for d in deltas if d == 2 or p > 3]
            elif "b" in takes:
                found += [
                    (claim, p, {"a": a, "b": b})
                    for a in sample_values(p, a_set, "a")
                    for b in sample_values(p, b_set, "b")
                ]
            elif "a" in takes:
                found += [(claim, p, {"a": a}) for a in sample_values(p, a_set, "a")]
            else:
                found.append((claim, p, {}))
        tasks.append((claim, found))
    return tasks


def run_task(task) -> verify.VerifyReport:
    claim, p, params = task
    return verify.CHECKERS[claim](p, **params)


def _flatten(params: dict) -> str:
    return ";".join(f"{k}={v}" for k, v in params.items())


def report_row(rep: verify.VerifyReport) -> dict:
    return {
        "claim": rep.claim,
        "p": rep.p,
        "params": _flatten(rep.params),
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "pass": rep.passed,
        "note": rep.note,
    }


def write_records(rows, fields, fmt, stream) -> None:
    if fmt == "csv":
        writer = csv.DictWriter(stream, fieldnames=fields, lineterminator="\r\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({
                k: ("" if v is None else ("true" if v is True else "false" if v is False else v))
                for k, v in row.items()
            })
    else:
        for row in rows:
            stream.write(json.dumps(row) + "\n")


def _open_out(path):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline="", encoding="utf-8"), True


def cmd_verify(args) -> int:
    names = list(CLAIM_DOMAINS) if args.claims == "all" else args.claims.split(",")
    unknown = [c for c in names if c not in CLAIM_DOMAINS]
    if unknown:
        raise UsageError(f"unknown claims: {', '.join(unknown)}")
    if args.pmin > args.pmax:
        raise UsageError("pmin exceeds pmax")
    deltas = {"1": [1], "2": [2], "both": [1, 2]}[args.delta]
    per_claim = build_tasks(
        names, args.pmin, args.pmax, parse_value_set(args.a), parse_value_set(args.b), deltas
    )
    if args.claims != "all":
        empty = [c for c, found in per_claim if not found]
        if empty:
            raise UsageError(f"no primes in [{args.pmin}, {args.pmax}] fit the domain of {', '.join(empty)}")
    tasks = sorted(
        (t for _, found in per_claim for t in found),
        key=lambda t: (t[0], t[1], tuple(sorted(t[2].items()))),
    )
    if not tasks:
        raise UsageError("nothing to verify in the requested range")

    reports = []
    jobs = args.jobs or os.cpu_count() or 1
    if jobs == 1:
        for t in tasks:
            rep = run_task(t)
            reports.append(rep)
            if args.fail_fast and not rep.passed:
                break
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rep in pool.map(run_task, tasks, chunksize=max(1, len(tasks) // (8 * jobs))):
                reports.append(rep)
                if args.fail_fast and not rep.passed:
                    break
    reports.sort(key=lambda r: r.sort_key())

    stream, close = _open_out(args.out)
    try:
        write_records((report_row(r) for r in reports), REPORT_FIELDS, args.format, stream)
    finally:
        if close:
            stream.close()
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FALSE


def table_row(p: int) -> dict:
    row = dict.fromkeys(TABLE_FIELDS)
    row.update(p=p, p_mod_8=p % 8, s=counting.s_count(p, 1), t=counting.t_count(p, 1))
    row["count_below_quarter"] = counting.count_below_quarter(p, 1, -1)
    data = quadfield.class_data(p)
    row["h_imag"] = data.h_imag
    row["h_real"] = data.h_real
    if data.eps is not None:
        row["eps_a"], row["eps_b"] = data.eps.a, data.eps.b
    if p % 4 == 1:
        row["x"], row["y"] = two_squares(p)
    return row


def cmd_table(args) -> int:
    if args.pmin > args.pmax:
        raise UsageError("pmin exceeds pmax")
    primes = primes_in(max(args.pmin, 3), args.pmax)
    jobs = args.jobs or os.cpu_count() or 1
    if jobs == 1:
        rows = [table_row(p) for p in primes]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(table_row, primes))
    stream, close = _open_out(args.out)
    try:
        write_records(rows, TABLE_FIELDS, args.format, stream)
    finally:
        if close:
            stream.close()
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--pmin", type=int, required=True)
        p.add_argument("--pmax", type=int, required=True)
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", default="-")
        p.add_argument("--jobs", type=int, default=0, help="worker processes (default: CPU count)")

    v = sub.add_parser("verify", help="check identities over a prime range")
    common(v)
    v.add_argument("--claims", default="all", help=f"comma list from {', '.join(CLAIM_DOMAINS)}, or all")
    v.add_argument("--a", default="sample:4", help="all or sample:N")
    v.add_argument("--b", default="sample:4", help="all or sample:N (thm_3_1 only)")
    v.add_argument("--delta", choices=["1", "2", "both"], default="both")
    v.add_argument("--fail-fast", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="per-prime table of counts, units and class numbers")
    common(t)
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"quadres: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
