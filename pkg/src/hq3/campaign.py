"""Verification campaigns: parameter grids, parallel execution, reports.

A campaign runs a selection of catalog identities over every point of a
parameter grid.  Each (point, identity) pair yields exactly one report row:

    pass        every index combination checked equal
    fail        a counterexample was found (witness recorded)
    degenerate  a hypothesis fails at this point (reason recorded), so the
                identity is out of scope there - never a pass or a fail

Scalar identities do not involve (l1, l2, l3) and are checked once per point
with "lambda": null; quaternion identities run once per lambda triple.
Reports are JSON lines, written in a canonical deterministic order with a
trailing summary object and no timestamps, so identical grids produce
byte-identical files.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from gmpy2 import mpq

from .catalog import (
    ALL_IDS,
    CATALOG,
    IdentityDef,
    bump_value,
    get_identity,
    serialize_value,
    values_equal,
)
from .errors import DegenerateDenominator, Hq3Error, UndefinedSequence
from .exact_arith import rat
from .horadam_core import HoradamParams, SequenceTables
from .pgq_algebra import PgqParams
from .quat_sequences import QuatSeqContext, RootData

DEFAULT_SEED = 0
JOBS_ENV_VAR = "HQ3_JOBS"

_REQUIRED_LAMBDAS = ((1, 1, 1), (0, 0, 0), (-1, 2, 1))
_QUICK_LAMBDAS = ((1, 1, 1), (0, 0, 0), (-1, 2, 1), (2, 1, -1))


def _rats(values) -> list:
    return sorted(rat(v) for v in values)


def sample_default_lambdas(seed: int = DEFAULT_SEED, count: int = 16) -> list[tuple]:
    """Deterministic sample of lambda triples from {-1, 0, 1, 2}^3.

    Always includes (1,1,1), (0,0,0) and (-1,2,1); the rest are drawn with the
    given seed.
    """
    choices = [mpq(c) for c in (-1, 0, 1, 2)]
    required = [tuple(mpq(x) for x in t) for t in _REQUIRED_LAMBDAS]
    pool = [t for t in itertools.product(choices, repeat=3) if t not in required]
    rng = random.Random(seed)
    picked = rng.sample(pool, count - len(required))
    return sorted(set(required) | set(picked))


@dataclass
class GridSpec:
    """A verification grid: parameter ranges, index bounds, identity selection."""

    name: str
    p: list
    q: list
    w0: list
    w1: list
    s: list[int]
    lambdas: list[tuple]
    n_max: int = 12
    m_policy: object = "all"  # "all" or an explicit list of m values
    identities: list[str] | None = None
    seed: int = DEFAULT_SEED
    allow_zero_q: bool = False

    def validate(self):
        if self.n_max < 2:
            raise ValueError("n_max must be >= 2")
        if not all(isinstance(s, int) and s >= 1 for s in self.s):
            raise ValueError("every s must be an integer >= 1")
        if self.m_policy != "all":
            bad = [m for m in self.m_policy if not isinstance(m, int) or m < 0]
            if bad:
                raise ValueError(f"m values must be integers >= 0, got {bad}")
        for ident in self.selected_identities():
            get_identity(ident)
        if not self.allow_zero_q and any(q == 0 for q in self.q):
            raise ValueError(
                "q = 0 gives a zero characteristic root; drop it or set allow_zero_q"
            )

    def selected_identities(self) -> list[str]:
        if self.identities is None:
            return list(ALL_IDS)
        # keep catalog order regardless of user order
        chosen = set(self.identities)
        unknown = chosen - set(ALL_IDS)
        if unknown:
            get_identity(sorted(unknown)[0])  # raises UnknownIdentity
        return [i for i in ALL_IDS if i in chosen]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "p": [str(x) for x in self.p],
            "q": [str(x) for x in self.q],
            "w0": [str(x) for x in self.w0],
            "w1": [str(x) for x in self.w1],
            "s": list(self.s),
            "lambdas": [[str(x) for x in t] for t in self.lambdas],
            "n_max": self.n_max,
            "m_policy": self.m_policy if self.m_policy == "all" else list(self.m_policy),
            "identities": self.identities,
            "seed": self.seed,
            "allow_zero_q": self.allow_zero_q,
        }

    @classmethod
    def from_json(cls, obj: dict, name: str = "file") -> GridSpec:
        try:
            lambdas = [tuple(rat(x) for x in t) for t in obj["lambdas"]]
            spec = cls(
                name=obj.get("name", name),
                p=_rats(obj["p"]),
                q=_rats(obj["q"]),
                w0=_rats(obj["w0"]),
                w1=_rats(obj["w1"]),
                s=sorted(int(s) for s in obj["s"]),
                lambdas=sorted(lambdas),
                n_max=int(obj.get("n_max", 12)),
                m_policy=obj.get("m_policy", "all"),
                identities=obj.get("identities"),
                seed=int(obj.get("seed", DEFAULT_SEED)),
                allow_zero_q=bool(obj.get("allow_zero_q", False)),
            )
        except KeyError as exc:
            raise ValueError(f"grid file is missing field {exc}") from None
        spec.validate()
        return spec


def default_grid(seed: int = DEFAULT_SEED) -> GridSpec:
    """p, q in [-3, 3] (q != 0, repeated-root pairs skipped), seeds in [-2, 2],
    s in {1, 2, 3}, 16 sampled lambda triples, n <= 12, all m <= n."""
    return GridSpec(
        name="default",
        p=_rats(range(-3, 4)),
        q=_rats(x for x in range(-3, 4) if x != 0),
        w0=_rats(range(-2, 3)),
        w1=_rats(range(-2, 3)),
        s=[1, 2, 3],
        lambdas=sample_default_lambdas(seed),
        n_max=12,
        seed=seed,
    )


def quick_grid(seed: int = DEFAULT_SEED) -> GridSpec:
    """Small smoke grid: p, q in [-2, 2], seeds in [-1, 1], 4 lambda triples, n <= 8."""
    return GridSpec(
        name="quick",
        p=_rats(range(-2, 3)),
        q=_rats(x for x in range(-2, 3) if x != 0),
        w0=_rats(range(-1, 2)),
        w1=_rats(range(-1, 2)),
        s=[1, 2, 3],
        lambdas=sorted(tuple(mpq(x) for x in t) for t in _QUICK_LAMBDAS),
        n_max=8,
        seed=seed,
    )


def load_grid(path) -> GridSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return GridSpec.from_json(json.load(fh))


def scalar_points(grid: GridSpec):
    """Enumerate (p, q, w0, w1, s) tasks in canonical order.

    Returns (tasks, skipped): tasks as string-keyed dicts ready for workers,
    skipped as (task, reason) pairs for points violating q != 0 or D != 0.
    """
    tasks = []
    skipped = []
    for p, q, w0, w1, s in itertools.product(grid.p, grid.q, grid.w0, grid.w1, grid.s):
        task = {"p": str(p), "q": str(q), "w0": str(w0), "w1": str(w1), "s": s}
        if q == 0:
            skipped.append((task, "q = 0"))
        elif p * p - 4 * q == 0:
            skipped.append((task, "p^2 - 4q = 0"))
        else:
            tasks.append(task)
    return tasks, skipped


def resolve_jobs(jobs: int | None) -> int:
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        return max(1, int(env))
    if jobs:
        return max(1, jobs)
    return os.cpu_count() or 1


# -- worker side -----------------------------------------------------------------


@dataclass
class _WorkerConfig:
    n_max: int
    m_list: list[int] | None
    lambdas: list[PgqParams]
    lambda_strs: list[list[str]]
    scalar_defs: list[IdentityDef]
    quat_defs: list[IdentityDef]
    perturb: str | None


_CFG: _WorkerConfig | None = None


def _parse_config(cfg: dict) -> _WorkerConfig:
    lambdas = [PgqParams.of(*t) for t in cfg["lambdas"]]
    selected = cfg["identities"]
    return _WorkerConfig(
        n_max=cfg["n_max"],
        m_list=cfg["m_list"],
        lambdas=lambdas,
        lambda_strs=[[str(x) for x in t] for t in cfg["lambdas"]],
        scalar_defs=[CATALOG[i] for i in selected if CATALOG[i].group == "scalar"],
        quat_defs=[CATALOG[i] for i in selected if CATALOG[i].group == "quaternion"],
        perturb=cfg["perturb"],
    )


def _init_worker(cfg: dict):
    global _CFG
    _CFG = _parse_config(cfg)


def _indices(d: IdentityDef, n_max: int, m_list):
    if d.arity == "point":
        yield None, None
    elif d.arity == "series":
        yield n_max, None
    elif d.arity == "n":
        for n in range(d.n_min, n_max + 1):
            yield n, None
    elif d.arity == "nm":
        for n in range(d.n_min, n_max + 1):
            ms = range(d.m_min, n + 1) if m_list is None else [m for m in m_list if d.m_min <= m <= n]
            for m in ms:
                yield n, m
    elif d.arity == "nm-free":
        ms = range(max(d.m_min, 0), n_max + 1) if m_list is None else [m for m in m_list if m >= d.m_min]
        for n in range(d.n_min, n_max + 1):
            for m in ms:
                yield n, m
    else:  # pragma: no cover
        raise ValueError(f"unknown arity {d.arity!r}")


def _degenerate_reason(d: IdentityDef, tab: SequenceTables) -> str | None:
    if d.needs_w and tab.w(tab.s) == 0:
        return "W_s = 0"
    if d.needs_u and tab.u(tab.s) == 0:
        return "U_s = 0"
    if d.needs_sum and tab.sum_denom == 0:
        return "q^s - V_s + 1 = 0"
    return None


def _run_identity(d: IdentityDef, env, tab: SequenceTables, cfg: _WorkerConfig):
    """Run one identity at one (point, lambda); returns (status, checks, reason, witness)."""
    reason = _degenerate_reason(d, tab)
    if reason is not None:
        return "degenerate", 0, reason, None
    checks = 0
    try:
        for n, m in _indices(d, cfg.n_max, cfg.m_list):
            if m is not None:
                lhs, rhs = d.run(env, n, m)
            elif n is not None:
                lhs, rhs = d.run(env, n)
            else:
                lhs, rhs = d.run(env)
            if cfg.perturb == d.ident:
                rhs = bump_value(rhs)
            checks += 1
            if not values_equal(lhs, rhs):
                witness = {
                    "n": n,
                    "m": m,
                    "lhs": serialize_value(lhs),
                    "rhs": serialize_value(rhs),
                }
                return "fail", checks, None, witness
    except (UndefinedSequence, DegenerateDenominator) as exc:
        # backstop: hypothesis violations are degeneracies, never failures
        return "degenerate", 0, str(exc), None
    return "pass", checks, None, None


def _row(task, ident, lam_strs, status, checks, reason, witness) -> dict:
    return {
        "identity": ident,
        "p": task["p"],
        "q": task["q"],
        "w0": task["w0"],
        "w1": task["w1"],
        "s": task["s"],
        "lambda": lam_strs,
        "status": status,
        "checks": checks,
        "reason": reason,
        "witness": witness,
    }


def _point_rows(task: dict) -> list[dict]:
    cfg = _CFG
    tab = SequenceTables(rat(task["p"]), rat(task["q"]), rat(task["w0"]), rat(task["w1"]), task["s"])
    rows = []
    for d in cfg.scalar_defs:
        status, checks, reason, witness = _run_identity(d, tab, tab, cfg)
        rows.append(_row(task, d.ident, None, status, checks, reason, witness))
    if cfg.quat_defs:
        root = RootData(tab)
        for lam, lam_strs in zip(cfg.lambdas, cfg.lambda_strs):
            params = HoradamParams(tab.p, tab.q, tab.w0, tab.w1, tab.s, lam)
            ctx = QuatSeqContext(params, tab=tab, root=root)
            for d in cfg.quat_defs:
                status, checks, reason, witness = _run_identity(d, ctx, tab, cfg)
                rows.append(_row(task, d.ident, lam_strs, status, checks, reason, witness))
    return rows


# -- driver side -----------------------------------------------------------------


@dataclass
class CampaignResult:
    summary: dict
    fails: list[dict] = field(default_factory=list)
    rows: list[dict] | None = None

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["fails"] == 0 else 1


def run_campaign(
    grid: GridSpec,
    jobs: int | None = None,
    perturb: str | None = None,
    fail_fast: bool = False,
    out=None,
    out_format: str = "json",
    keep_rows: bool = False,
    echo=None,
) -> CampaignResult:
    """Run the selected identities over the grid.

    `out` is an optional report path (JSON lines, or per-identity CSV counts
    with out_format="csv").  `echo`, if given, receives progress strings.
    """
    grid.validate()
    if perturb is not None:
        get_identity(perturb)
    selected = grid.selected_identities()
    cfg = {
        "n_max": grid.n_max,
        "m_list": None if grid.m_policy == "all" else list(grid.m_policy),
        "lambdas": [[str(x) for x in t] for t in grid.lambdas],
        "identities": selected,
        "perturb": perturb,
    }
    tasks, skipped = scalar_points(grid)
    jobs = resolve_jobs(jobs)

    counts = {i: {"pass": 0, "fail": 0, "degenerate": 0} for i in selected}
    checks_run = 0
    nrows = 0
    fails: list[dict] = []
    kept: list[dict] | None = [] if keep_rows else None

    writer = None
    if out is not None and out_format == "json":
        writer = open(out, "w", encoding="utf-8")

    def emit(row: dict):
        nonlocal checks_run, nrows
        nrows += 1
        counts[row["identity"]][row["status"]] += 1
        checks_run += row["checks"]
        if row["status"] == "fail":
            fails.append(row)
        if kept is not None:
            kept.append(row)
        if writer is not None:
            writer.write(json.dumps(row) + "\n")

    try:
        for task, reason in skipped:
            for ident in selected:
                emit(_row(task, ident, None, "degenerate", 0, reason, None))

        executor = None
        if jobs == 1 or len(tasks) <= 1:
            _init_worker(cfg)
            results = map(_point_rows, tasks)
        else:
            executor = ProcessPoolExecutor(
                max_workers=jobs, initializer=_init_worker, initargs=(cfg,)
            )
            chunk = max(1, len(tasks) // (jobs * 16))
            results = executor.map(_point_rows, tasks, chunksize=chunk)
        done = 0
        try:
            for point_rows in results:
                for row in point_rows:
                    emit(row)
                done += 1
                if echo is not None and done % 500 == 0:
                    echo(f"{done}/{len(tasks)} points")
                if fail_fast and fails:
                    break
        finally:
            if executor is not None:
                executor.shutdown(wait=False, cancel_futures=True)

        summary = {
            "type": "summary",
            "grid": grid.name,
            "seed": grid.seed,
            "n_max": grid.n_max,
            "m_policy": grid.m_policy if grid.m_policy == "all" else list(grid.m_policy),
            "lambdas": cfg["lambdas"],
            "points": len(tasks),
            "skipped_points": len(skipped),
            "identities": counts,
            "rows": nrows,
            "checks": checks_run,
            "fails": len(fails),
            "perturb": perturb,
        }
        if writer is not None:
            writer.write(json.dumps({"summary": summary}) + "\n")
    finally:
        if writer is not None:
            writer.close()

    if out is not None and out_format == "csv":
        write_csv_counts(counts, out)

    return CampaignResult(summary=summary, fails=fails, rows=kept)


def write_csv_counts(counts: dict, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("identity,pass,fail,degenerate\n")
        for ident, c in counts.items():
            fh.write(f"{ident},{c['pass']},{c['fail']},{c['degenerate']}\n")


def summary_table(summary: dict) -> str:
    """Human-readable per-identity counts."""
    lines = [f"{'identity':<12} {'pass':>8} {'fail':>8} {'degenerate':>11}"]
    totals = {"pass": 0, "fail": 0, "degenerate": 0}
    for ident, c in summary["identities"].items():
        lines.append(f"{ident:<12} {c['pass']:>8} {c['fail']:>8} {c['degenerate']:>11}")
        for k in totals:
            totals[k] += c[k]
    lines.append(
        f"{'total':<12} {totals['pass']:>8} {totals['fail']:>8} {totals['degenerate']:>11}"
    )
    lines.append(
        f"rows={summary['rows']} checks={summary['checks']} fails={summary['fails']}"
        f" points={summary['points']} skipped={summary['skipped_points']}"
    )
    return "\n".join(lines)
