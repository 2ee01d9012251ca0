"""Command-line interface.

    ehrcomb numbers  --bernoulli N --harmonic N --eulerian2 N --stirling2 N --stirling1 N
    ehrcomb ehrhart  SPEC
    ehrcomb verify   [--all | --theorem1.1 --prop4.1 --prop-h --coeff --general-comb
                      --open-comb --rgf --stirling-poset --pyramid] [--max-n N]
    ehrcomb explore  --pyramid --max-n N

Every subcommand accepts ``--format text|json|csv``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import identities as ids
from .ehrhart import ehrhart_data
from .errors import EhrcombError, SizeExceeded
from .exactpoly import rational_str
from .numbers import bernoulli, harmonic, stirling_triangle
from .poset import (
    Poset,
    adjoin_max,
    bicomb_over,
    comb_over,
    make_antichain,
    make_chain,
    make_comb,
    parse_poset_spec,
)
from .stirlingperm import ENUMERATION_THRESHOLD, second_eulerian_with_path

THREADS_ENV = "EHRCOMB_THREADS"
EHRHART_SIZE_CAP = 16

SUITES = (
    "theorem1.1", "prop4.1", "prop-h", "coeff", "general-comb",
    "open-comb", "rgf", "stirling-poset", "pyramid",
)


@dataclass
class RunConfig:
    command: str
    max_n: int = 6
    n: int | None = None
    k: int | None = None
    r: int | None = None
    poset_spec: str | None = None
    format: str = "text"
    enumeration_cap: int = ENUMERATION_THRESHOLD
    poset_cap: int = ids.POSET_CAP
    threads: int = 1
    suites: list[str] = field(default_factory=list)


# --- rendering ---------------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, (int, Fraction)):
        return rational_str(v)
    return str(v)


def render_table(headers: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    if fmt == "json":
        return dump_json([dict(zip(headers, (_json(v) for v in row))) for row in rows])
    cells = [[_cell(v) for v in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(headers)
        w.writerows(cells)
        return buf.getvalue().rstrip("\n")
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines)


def _json(v):
    if isinstance(v, (list, tuple)):
        return [_json(x) for x in v]
    if isinstance(v, Fraction):
        return rational_str(v)
    return v


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# --- commands ------------------------------------------------------------------------

def cmd_numbers(args) -> tuple[str, int]:
    fmt = args.format
    blocks = []
    if args.bernoulli is not None:
        rows = [(n, bernoulli(n)) for n in range(args.bernoulli + 1)]
        blocks.append(("bernoulli (convention B_1 = +1/2)", ["n", "B_n"], rows))
    if args.harmonic is not None:
        rows = [(n, harmonic(n)) for n in range(1, args.harmonic + 1)]
        blocks.append(("harmonic", ["n", "H_n"], rows))
    if args.eulerian2 is not None:
        rows = []
        for n in range(1, args.eulerian2 + 1):
            row, path = second_eulerian_with_path(n, args.enumeration_cap)
            rows.append((n, row, path))
        blocks.append(("second eulerian <<n,k>>, k = 0..n-1", ["n", "row", "path"], rows))
    if args.stirling2 is not None:
        tri = stirling_triangle("second", args.stirling2)
        blocks.append(("stirling second kind", ["n", "row"], list(enumerate(tri))))
    if args.stirling1 is not None:
        tri = stirling_triangle("first_unsigned", args.stirling1)
        blocks.append(("stirling first kind (unsigned)", ["n", "row"], list(enumerate(tri))))
    if not blocks:
        raise SystemExit("numbers: give at least one of --bernoulli/--harmonic/--eulerian2/"
                         "--stirling2/--stirling1")
    if fmt == "json":
        return dump_json({title: [dict(zip(h, map(_json, r))) for r in rows]
                          for title, h, rows in blocks}), 0
    parts = []
    for title, headers, rows in blocks:
        body = render_table(headers, rows, fmt)
        parts.append(body if fmt == "csv" else f"# {title}\n{body}")
    return "\n\n".join(parts), 0


def cmd_ehrhart(args) -> tuple[str, int]:
    poset = parse_poset_spec(args.spec)
    cap = args.unsafe_cap if args.unsafe_cap is not None else EHRHART_SIZE_CAP
    if poset.size > cap:
        raise SizeExceeded("poset", poset.size, cap)
    data = ehrhart_data(poset)
    at_minus_one = data.polynomial(-1)
    out = data.to_json()
    out.update({
        "linear_coeff": rational_str(data.linear_coeff),
        "linear_coeff_shifted": rational_str(data.linear_coeff_shifted),
        "ehrhart_at_minus_one": rational_str(at_minus_one),
    })
    if args.format == "json":
        return dump_json(out), 0
    rows = [
        ("dimension", data.dim),
        ("ehrhart", data.polynomial.to_json()),
        ("ehrhart (pretty)", str(data.polynomial)),
        ("hstar", list(data.hstar.entries)),
        ("[x]Ehr(x)", data.linear_coeff),
        ("[x]Ehr(x-1)", data.linear_coeff_shifted),
        ("Ehr(-1)", at_minus_one),
    ]
    return render_table(["quantity", "value"], rows, args.format), 0


def _suite_jobs(cfg: RunConfig) -> list[Callable[[], ids.IdentityReport]]:
    N = cfg.max_n
    jobs: list[Callable[[], ids.IdentityReport]] = []
    cap = cfg.enumeration_cap
    for suite in cfg.suites:
        if suite == "theorem1.1":
            for n in range(1, N + 1):
                jobs.append(lambda n=n: ids.verify_theorem_1_1_first(n, cap))
                jobs.append(lambda n=n: ids.verify_theorem_1_1_second(n, cap))
        elif suite == "prop4.1":
            for n in range(0, N + 1):
                for k in range(1, N + 1):
                    jobs.append(lambda n=n, k=k: ids.verify_prop_4_1(n, k))
        elif suite == "prop-h":
            for n in range(1, min(N, 5) + 1):
                jobs.append(lambda n=n: ids.verify_prop_h(n))
        elif suite == "coeff":
            for n in range(1, N + 1):
                jobs.append(lambda n=n: ids.verify_linear_coeff_comb(n))
        elif suite == "general-comb":
            for p in (make_chain(1), make_chain(2), make_antichain(2)):
                for n in range(1, N + 1):
                    if n * (p.size + 1) <= cfg.poset_cap:
                        jobs.append(lambda p=p, n=n: ids.verify_general_comb(p, n, cfg.poset_cap))
        elif suite == "open-comb":
            for n in range(1, min(N, 5) + 1):
                jobs.append(lambda n=n: ids.verify_open_comb(n))
        elif suite == "rgf":
            pairs = [(cfg.n, cfg.k)] if cfg.n and cfg.k else [
                (n, k) for n, k in [(1, 2), (2, 2), (3, 2), (2, 3), (4, 2), (3, 3)] if n <= N
            ]
            for n, k in pairs:
                jobs.append(lambda n=n, k=k: ids.verify_rgf_correspondence(n, k))
        elif suite == "stirling-poset":
            pairs = [(cfg.k, cfg.r)] if cfg.k and cfg.r else [
                (k, r) for k, r in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2), (1, 3), (2, 3)]
                if k <= N
            ]
            for k, r in pairs:
                jobs.append(lambda k=k, r=r: ids.verify_stirling_poset(k, r))
        elif suite == "pyramid":
            for p in pyramid_corpus(min(cfg.poset_cap - 1, 6)):
                jobs.append(lambda p=p: ids.verify_pyramid(p))
    return jobs


def pyramid_corpus(max_size: int) -> list[Poset]:
    out = []
    for m in range(0, max_size + 1):
        out += [make_chain(m), make_antichain(m)]
    for n in range(1, max_size // 2 + 1):
        out.append(make_comb(n))
    out.append(comb_over(make_antichain(2), 1))
    out.append(bicomb_over(make_chain(1), make_chain(1), 1))
    out.append(adjoin_max(make_antichain(3)))
    return [p for p in out if p.size <= max_size]


def run_reports(cfg: RunConfig) -> list[ids.IdentityReport]:
    jobs = _suite_jobs(cfg)
    if cfg.threads > 1:
        with ThreadPoolExecutor(cfg.threads) as pool:
            return list(pool.map(lambda f: f(), jobs))
    return [f() for f in jobs]


def cmd_verify(args) -> tuple[str, int]:
    selected = [s for s in SUITES if getattr(args, "suite_" + s.replace(".", "_").replace("-", "_"))]
    if args.all or not selected:
        selected = list(SUITES)
    cfg = RunConfig(
        command="verify", max_n=args.max_n, n=args.n, k=args.k, r=args.r,
        format=args.format, threads=args.threads, suites=selected,
        enumeration_cap=args.enumeration_cap,
        poset_cap=args.unsafe_cap if args.unsafe_cap is not None else ids.POSET_CAP,
    )
    reports = run_reports(cfg)
    failed = sum(not r.passed for r in reports)
    code = 1 if failed else 0
    if args.format == "json":
        return dump_json({
            "reports": [r.to_json() for r in reports],
            "passed": len(reports) - failed,
            "failed": failed,
        }), code
    rows = [(r.name, r.parameter, r.lhs, r.rhs, "PASS" if r.passed else "FAIL") for r in reports]
    body = render_table(["identity", "param", "lhs", "rhs", "status"], rows, args.format)
    if args.format == "text":
        body += f"\n\n{len(reports) - failed} passed, {failed} failed"
    return body, code


def cmd_explore(args) -> tuple[str, int]:
    if not args.pyramid:
        raise SystemExit("explore: only --pyramid is available")
    rows = ids.explore_pyramid(args.max_n)
    table = [(r["n"], r["shifted"], r["unshifted"]) for r in rows]
    headers = ["n", "[x]Ehr_Pyr(P_n)(x-1)", "[x]Ehr_Pyr(P_n)(x)"]
    if args.format == "json":
        return dump_json({"exploratory": True, "rows": [dict(zip(headers, map(_json, r)))
                                                          for r in table]}), 0
    body = render_table(headers, table, args.format)
    if args.format == "text":
        body = "# exploratory values, no identity asserted\n" + body
    return body, 0


# --- parser ------------------------------------------------------------------------------

def _threads_default() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="csv columns mirror the text table headers")
    common.add_argument("--threads", type=int, default=_threads_default(),
                        help=f"worker threads (default from ${THREADS_ENV}, else 1)")
    common.add_argument("--unsafe-cap", type=int, default=None,
                        help="override the size cap on brute-force paths")
    common.add_argument("--enumeration-cap", type=int, default=ENUMERATION_THRESHOLD,
                        help="largest n whose second Eulerian row is enumerated")

    parser = argparse.ArgumentParser(prog="ehrcomb", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", parents=[common], help="number tables")
    for name in ("bernoulli", "harmonic", "eulerian2", "stirling2", "stirling1"):
        p.add_argument(f"--{name}", type=int, metavar="N")
    p.set_defaults(func=cmd_numbers)

    p = sub.add_parser("ehrhart", parents=[common], help="Ehrhart data of an order polytope",
                       epilog="SPEC: chain:m | antichain:m | comb:n | comb(SPEC):n | "
                              "bicomb(SPEC,SPEC):n | pyr(SPEC) | stirling:k:r | file:PATH")
    p.add_argument("spec")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("verify", parents=[common], help="run verification suites",
                       epilog="csv columns: identity,param,lhs,rhs,status")
    p.add_argument("--all", action="store_true")
    for s in SUITES:
        p.add_argument(f"--{s}", dest="suite_" + s.replace(".", "_").replace("-", "_"),
                       action="store_true")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", parents=[common], help="exploratory tables")
    p.add_argument("--pyramid", action="store_true")
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_n", "threads"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            parser.error(f"--{name.replace('_', '-')} must be positive")
    try:
        out, code = args.func(args)
    except EhrcombError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
