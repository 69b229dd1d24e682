"""Command-line front end: sequence tables, verification campaigns, identity info.

    hq3 seq W --params=1,-1,0,1 --n-max 10
    hq3 verify --quick --jobs 2 --out report.jsonl
    hq3 verify --grid mygrid.json --perturb thm3.1
    hq3 explain thm2.3

Rational arguments accept "n" or "n/d"; use --flag=value for negative values
(e.g. --params=-1,2,0,1).  The HQ3_JOBS environment variable overrides --jobs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .campaign import (
    CampaignResult,
    GridSpec,
    default_grid,
    load_grid,
    quick_grid,
    resolve_jobs,
    run_campaign,
    summary_table,
)
from .catalog import ALL_IDS, get_identity
from .errors import Hq3Error
from .exact_arith import rat
from .horadam_core import HoradamParams, SequenceTables
from .pgq_algebra import PgqParams, Quaternion

_KIND_ALIASES = {
    "w": "W",
    "u": "U",
    "v": "V",
    "w(s)": "W(s)",
    "ws": "W(s)",
    "u(s)": "U(s)",
    "us": "U(s)",
    "qw(s)": "QW(s)",
    "qws": "QW(s)",
    "qw": "QW(s)",
    "qu(s)": "QU(s)",
    "qus": "QU(s)",
    "qu": "QU(s)",
}


def _parse_rational_list(text: str, what: str) -> list:
    try:
        return [rat(part.strip()) for part in text.split(",")]
    except ValueError as exc:
        raise Hq3Error(f"bad {what}: {exc}") from None


def _seq_values(kind: str, tab: SequenceTables, lam: PgqParams, n_max: int):
    def quat(fetch, n):
        return Quaternion(fetch(n), fetch(n + 1), fetch(n + 2), fetch(n + 3), lam)

    fetchers = {
        "W": tab.w,
        "U": tab.u,
        "V": tab.v,
        "W(s)": tab.ws,
        "U(s)": tab.us,
        "QW(s)": lambda n: quat(tab.ws, n),
        "QU(s)": lambda n: quat(tab.us, n),
    }
    fetch = fetchers[kind]
    return [(n, fetch(n)) for n in range(n_max + 1)]


def cmd_seq(args) -> int:
    kind = _KIND_ALIASES.get(args.kind.lower())
    if kind is None:
        raise Hq3Error(f"unknown kind {args.kind!r}; choose from W, U, V, W(s), U(s), QW(s), QU(s)")
    values = _parse_rational_list(args.params, "--params")
    if len(values) == 2:
        if kind in ("W", "W(s)", "QW(s)"):
            raise Hq3Error(f"kind {kind} needs --params p,q,W0,W1")
        values = values + [rat(0), rat(1)]
    if len(values) != 4:
        raise Hq3Error("--params takes p,q[,W0,W1]")
    lam = PgqParams.of(*_parse_rational_list(args.lam, "--lambda"))
    params = HoradamParams.of(*values, s=args.s, lam=lam)
    tab = SequenceTables.for_params(params)
    rows = _seq_values(kind, tab, lam, args.n_max)

    if args.format == "json":
        payload = {
            "kind": kind,
            "p": str(params.p),
            "q": str(params.q),
            "w0": str(params.w0),
            "w1": str(params.w1),
            "s": params.s,
            "lambda": lam.to_json(),
            "values": [
                {"n": n, "value": v.to_json() if isinstance(v, Quaternion) else str(v)}
                for n, v in rows
            ],
        }
        text = json.dumps(payload, indent=2)
    else:
        text = "\n".join(f"{n}\t{v}" for n, v in rows)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def _build_grid(args) -> GridSpec:
    if args.grid and args.quick:
        raise Hq3Error("--grid and --quick are mutually exclusive")
    if args.grid:
        grid = load_grid(args.grid)
    elif args.quick:
        grid = quick_grid(seed=args.seed)
    else:
        grid = default_grid(seed=args.seed)
    if args.identities:
        grid.identities = [i.strip() for i in args.identities.split(",")]
    if args.n_max is not None:
        grid.n_max = args.n_max
    return grid


def cmd_verify(args) -> int:
    grid = _build_grid(args)
    jobs = resolve_jobs(args.jobs)
    echo = (lambda msg: print(msg, file=sys.stderr)) if args.verbose else None
    started = time.perf_counter()
    result: CampaignResult = run_campaign(
        grid,
        jobs=jobs,
        perturb=args.perturb,
        fail_fast=args.fail_fast,
        out=args.out,
        out_format=args.format,
    )
    elapsed = time.perf_counter() - started
    print(summary_table(result.summary))
    print(f"grid={grid.name} jobs={jobs} elapsed={elapsed:.1f}s", file=sys.stderr)
    if result.fails:
        w = result.fails[0]
        print(
            f"FIRST FAILURE: {w['identity']} at p={w['p']} q={w['q']} w0={w['w0']}"
            f" w1={w['w1']} s={w['s']} lambda={w['lambda']} n={w['witness']['n']}"
            f" m={w['witness']['m']}",
            file=sys.stderr,
        )
    return result.exit_code


def cmd_explain(args) -> int:
    if args.identity == "all":
        width = max(len(i) for i in ALL_IDS)
        for ident in ALL_IDS:
            print(f"{ident:<{width}}  {get_identity(ident).title}")
        return 0
    d = get_identity(args.identity)
    print(f"{d.ident} - {d.title}")
    print(f"  statement:  {d.statement}")
    print(f"  hypotheses: {d.hypotheses}")
    print(f"  where:      {d.where}")
    print(f"  checked:    {d.group} side-by-side evaluation, arity {d.arity!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hq3",
        description="Exact verification of higher-order Horadam quaternion identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_seq = sub.add_parser("seq", help="print a table of exact sequence values")
    p_seq.add_argument("kind", help="W, U, V, W(s), U(s), QW(s) or QU(s)")
    p_seq.add_argument("--params", required=True, help="p,q[,W0,W1] as rationals")
    p_seq.add_argument("--s", type=int, default=1, help="order s >= 1 (default 1)")
    p_seq.add_argument("--lambda", dest="lam", default="1,1,1", help="l1,l2,l3 (default 1,1,1)")
    p_seq.add_argument("--n-max", type=int, default=12)
    p_seq.add_argument("--out", default=None, help="write the table to a file")
    p_seq.add_argument("--format", choices=("text", "json"), default="text")
    p_seq.set_defaults(func=cmd_seq)

    p_ver = sub.add_parser("verify", help="run an identity-verification campaign")
    p_ver.add_argument("--grid", default=None, help="JSON grid file")
    p_ver.add_argument("--quick", action="store_true", help="use the small smoke grid")
    p_ver.add_argument("--out", default=None, help="report path (JSON lines, or CSV counts)")
    p_ver.add_argument("--format", choices=("json", "csv"), default="json")
    p_ver.add_argument("--jobs", type=int, default=None, help="worker processes (HQ3_JOBS overrides)")
    p_ver.add_argument("--seed", type=int, default=0, help="seed for the default lambda sample")
    p_ver.add_argument("--identities", default=None, help="comma-separated identity ids")
    p_ver.add_argument("--n-max", type=int, default=None, help="override the grid's n_max")
    p_ver.add_argument("--perturb", default=None, metavar="ID",
                       help="negative control: add 1 to one side of this identity")
    p_ver.add_argument("--fail-fast", action="store_true", help="stop at the first failure")
    p_ver.add_argument("--verbose", action="store_true", help="progress to stderr")
    p_ver.set_defaults(func=cmd_verify)

    p_exp = sub.add_parser("explain", help="describe a catalog identity")
    p_exp.add_argument("identity", help="identity id, or 'all' to list every id")
    p_exp.set_defaults(func=cmd_explain)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Hq3Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
