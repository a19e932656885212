"""Command-line front end: certified bounds, tables, oracle cross-checks."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .analysis import (
    ClassificationReport,
    Family,
    chern8_invariant,
    classify,
    conjecture_report,
    support_groups,
)
from .model import InvalidDimensionError, build_instance, expand_profile
from .solver import (
    DEFAULT_ORACLE_BUDGET,
    BoundCertificate,
    InternalConsistencyError,
    OracleBudgetExceeded,
    minimize,
    oracle_minimize,
    verify_certificate,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3

CSV_HEADER = ["n", "dim", "n_plus_1", "kosniowski_threshold", "bound",
              "kosniowski_ok", "frankel_ok", "family"]
STATUS_HEADER = ["n", "dim", "kosniowski_threshold", "frankel_threshold", "bound",
                 "kosniowski_ok", "frankel_ok"]
JSON_FIELDS = ("n", "dim", "bound", "witness", "kosniowski_threshold",
               "frankel_threshold", "kosniowski_ok", "frankel_ok", "family")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _fmt_vec(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


@dataclass
class Row:
    n: int
    bound: int
    witness: tuple[int, ...]
    full_witness: tuple[int, ...]
    kosniowski_threshold: int
    frankel_threshold: int
    kosniowski_ok: bool
    frankel_ok: bool
    family: str
    verified: bool
    certificate: BoundCertificate

    @property
    def dim(self) -> int:
        return 2 * self.n

    def record(self, full: bool = False) -> dict:
        rec = {
            "n": self.n,
            "dim": self.dim,
            "bound": self.bound,
            "witness": list(self.witness),
            "kosniowski_threshold": self.kosniowski_threshold,
            "frankel_threshold": self.frankel_threshold,
            "kosniowski_ok": self.kosniowski_ok,
            "frankel_ok": self.frankel_ok,
            "family": self.family,
            "verified": self.verified,
        }
        if full:
            rec["full_witness"] = list(self.full_witness)
        return rec


def compute_row(n: int) -> Row:
    inst = build_instance(n)
    cert = minimize(inst)
    rep = conjecture_report(n, cert)
    return Row(
        n=n,
        bound=cert.bound,
        witness=cert.witness.values,
        full_witness=expand_profile(n, cert.witness).values,
        kosniowski_threshold=rep.kosniowski_threshold,
        frankel_threshold=rep.frankel_threshold,
        kosniowski_ok=rep.kosniowski_ok,
        frankel_ok=rep.frankel_ok,
        family=classify(n).label,
        verified=cert.verified and verify_certificate(inst, cert),
        certificate=cert,
    )


def _fan_out(fn: Callable, ns: Sequence[int], jobs: int) -> list:
    if jobs <= 1:
        return [fn(n) for n in ns]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, ns))  # map preserves n order


def _check_n(n: int) -> None:
    if n < 3:
        raise UsageError(str(InvalidDimensionError(n)))


def _check_range(n_min: int, n_max: int) -> None:
    _check_n(n_min)
    if n_max < n_min:
        raise UsageError(f"empty range: n_min={n_min} > n_max={n_max}")


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def render_table(rows: list[Row], fmt: str, full: bool = False) -> str:
    if fmt == "csv":
        body = [[r.n, r.dim, r.n + 1, r.kosniowski_threshold, r.bound,
                 _fmt_bool(r.kosniowski_ok), _fmt_bool(r.frankel_ok), r.family] for r in rows]
        header = list(CSV_HEADER)
        if full:
            header.append("full_witness")
            for line, r in zip(body, rows):
                line.append(" ".join(map(str, r.full_witness)))
        return _csv_text(header, body)
    if fmt == "json":
        return json.dumps([r.record(full) for r in rows], indent=2) + "\n"
    # Markdown; bold marks B(n) below floor(n/2) + 1
    head = ["dim M=2n", "n+1", "[n/2]+1", "B(n)", "kosniowski_ok", "frankel_ok", "family"]
    if full:
        head.append("full witness")
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for r in rows:
        cells = [str(r.dim), str(r.n + 1), str(r.kosniowski_threshold), str(r.bound)]
        if not r.kosniowski_ok:
            cells = [f"**{c}**" for c in cells]
        cells += [_fmt_bool(r.kosniowski_ok), _fmt_bool(r.frankel_ok), r.family]
        if full:
            cells.append(_fmt_vec(r.full_witness))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_status(rows: list[Row], fmt: str) -> str:
    fields = [[r.n, r.dim, r.kosniowski_threshold, r.frankel_threshold, r.bound,
               r.kosniowski_ok, r.frankel_ok] for r in rows]
    if fmt == "json":
        return json.dumps([dict(zip(STATUS_HEADER, f)) for f in fields], indent=2) + "\n"
    text = [[_fmt_bool(x) if isinstance(x, bool) else x for x in f] for f in fields]
    if fmt == "csv":
        return _csv_text(STATUS_HEADER, text)
    lines = ["| " + " | ".join(STATUS_HEADER) + " |", "|" + "---|" * len(STATUS_HEADER)]
    lines += ["| " + " | ".join(map(str, t)) + " |" for t in text]
    return "\n".join(lines) + "\n"


def cmd_bound(args, out) -> int:
    _check_n(args.n)
    row = compute_row(args.n)
    report = classify(args.n)
    cert = row.certificate
    if args.format == "json":
        rec = row.record(args.full)
        rec["generator"] = cert.generator.kind.value
        out.write(json.dumps(rec, indent=2) + "\n")
    elif args.format == "csv":
        out.write(render_table([row], "csv", args.full))
    else:
        out.write(f"B({args.n}) = {row.bound}\n")
        out.write(f"witness (N_1..N_m) = {_fmt_vec(row.witness)}\n")
        if args.full:
            out.write(f"full profile (N_0..N_n) = {_fmt_vec(row.full_witness)}\n")
        gen = cert.generator
        out.write(f"generator: {gen.kind.value} on support {_fmt_vec(gen.support)}\n")
        out.write(f"family: {report.label}\n")
        if report.family is Family.IDENTITY_CONSTRAINT:
            out.write("note: the constraint G=0 is an identity for n=3; "
                      "N_1 = N_2 = 1 gives B(3)=2\n")
        out.write(f"verified: {_fmt_bool(row.verified)}\n")
    return EXIT_OK if row.verified else EXIT_VERIFY


def _table_rows(args) -> list[Row]:
    _check_range(args.n_min, args.n_max)
    return _fan_out(compute_row, range(args.n_min, args.n_max + 1), args.jobs)


def cmd_table(args, out) -> int:
    rows = _table_rows(args)
    out.write(render_table(rows, args.format, args.full))
    return EXIT_OK if all(r.verified for r in rows) else EXIT_VERIFY


def cmd_conjectures(args, out) -> int:
    rows = _table_rows(args)
    out.write(render_status(rows, args.format))
    return EXIT_OK if all(r.verified for r in rows) else EXIT_VERIFY


@dataclass
class Agreement:
    n: int
    bound: int
    oracle_bound: Optional[int]
    status: str  # "agree", "disagree", "unverified", "budget"

    def line(self) -> str:
        if self.status == "budget":
            return f"n={self.n} minimize={self.bound} oracle=- oracle budget exceeded"
        return f"n={self.n} minimize={self.bound} oracle={self.oracle_bound} {self.status}"


def cross_check(n: int, budget: int) -> Agreement:
    inst = build_instance(n)
    cert = minimize(inst)
    try:
        oc = oracle_minimize(inst, budget)
    except OracleBudgetExceeded:
        return Agreement(n, cert.bound, None, "budget")
    if oc.bound != cert.bound:
        return Agreement(n, cert.bound, oc.bound, "disagree")
    if not (verify_certificate(inst, cert) and verify_certificate(inst, oc)):
        return Agreement(n, cert.bound, oc.bound, "unverified")
    return Agreement(n, cert.bound, oc.bound, "agree")


def cmd_verify(args, out) -> int:
    _check_range(args.n_min, args.n_max)
    if args.oracle_budget < 1:
        raise UsageError("--oracle-budget must be positive")
    results = _fan_out(lambda n: cross_check(n, args.oracle_budget),
                       range(args.n_min, args.n_max + 1), args.jobs)
    if args.format == "json":
        out.write(json.dumps([r.__dict__ for r in results], indent=2) + "\n")
    elif args.format == "csv":
        out.write(_csv_text(["n", "bound", "oracle_bound", "status"],
                            [[r.n, r.bound, "" if r.oracle_bound is None else r.oracle_bound,
                              r.status] for r in results]))
    else:
        for r in results:
            out.write(r.line() + "\n")
    bad = [r.n for r in results if r.status in ("disagree", "unverified")]
    over = [r.n for r in results if r.status == "budget"]
    if bad:
        print(f"verification failed for n in {bad}", file=sys.stderr)
        return EXIT_VERIFY
    if over:
        print(f"oracle budget exceeded for n in {over}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _classify_payload(report: ClassificationReport) -> dict:
    data = {"n": report.n, "family": report.family.value, "k": report.k, "ell": report.ell}
    if report.family is Family.GENERIC:
        low, high = support_groups(report.n)
        data["low_group"] = list(low)
        data["high_group"] = list(high)
    return data


def cmd_classify(args, out) -> int:
    _check_n(args.n)
    report = classify(args.n)
    data = _classify_payload(report)
    if args.format == "json":
        out.write(json.dumps(data, indent=2) + "\n")
        return EXIT_OK
    if args.format == "csv":
        keys = list(data)
        row = [" ".join(map(str, v)) if isinstance(v, list) else ("" if v is None else v)
               for v in data.values()]
        out.write(_csv_text(keys, [row]))
        return EXIT_OK
    out.write(f"n={report.n} family: {report.label}\n")
    if report.family is Family.GENERIC:
        out.write(f"ell = {report.ell}\n")
        groups = ["{" + ", ".join(f"N_{j}" for j in g) + "}"
                  for g in (data["low_group"], data["high_group"])]
        out.write(f"support groups: {groups[0]} / {groups[1]}\n")
    return EXIT_OK


def cmd_chern8(args, out) -> int:
    count = args.count
    if count is None:
        count = minimize(build_instance(4)).bound
    if count < 1:
        raise UsageError("the number of fixed points must be positive")
    res = chern8_invariant(count)
    if args.format == "json":
        out.write(json.dumps({"fixed_points": count, "value": str(res.value),
                              "integral": res.integral, "warning": res.warning}) + "\n")
    else:
        out.write(f"integral of c2^2 = {res.value} (from {count} fixed points)\n")
        if res.warning:
            out.write(f"warning: {res.warning}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["md", "csv", "json"], default="md")
    common.add_argument("--full", action="store_true",
                        help="also print the expanded profile N_0..N_n")
    common.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET,
                        help="maximum oracle search nodes per n")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for ranges")

    parser = _Parser(prog="fixbound",
                     description="Exact lower bounds B(n) on fixed points of "
                                 "non-Hamiltonian symplectic circle actions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", parents=[common], help="certified B(n) for one n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bound)

    for name, func, help_text in [
        ("table", cmd_table, "table of B(n) with conjecture columns"),
        ("conjectures", cmd_conjectures, "table restricted to the status columns"),
        ("verify", cmd_verify, "cross-check minimize against the brute-force oracle"),
    ]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("n_min", type=int)
        p.add_argument("n_max", type=int)
        p.set_defaults(func=func)

    p = sub.add_parser("classify", parents=[common], help="degenerate family or threshold ell")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chern8", parents=[common],
                       help="integral of c2^2 in dimension 8 from a fixed-point count")
    p.add_argument("count", type=int, nargs="?", default=None,
                   help="number of fixed points (default: B(4))")
    p.set_defaults(func=cmd_chern8)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
