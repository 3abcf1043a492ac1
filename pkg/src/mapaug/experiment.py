"""Batch runs over instance families, with per-row invariant checks.

A suite spec is a JSON object::

    {"generator": "random" | "gap" | "baddfs",
     "sizes": [4, 5, ...],        # n for random, k for gap, depth for baddfs
     "count": 200,                # random only: instances to draw
     "seed": 1,
     "oracle": true,
     "diagnostics": true,
     "compare_unguided": false,
     "extra_heavy": [0, 12],      # random only, optional
     "workers": 1}

The JSON report carries no timings and is byte-stable for a fixed spec; the
CSV adds ``runtime_ms``.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .generators import gen_bad_dfs_instance, gen_gap_instance, random_suite
from .graph import MapInstance
from .io import fmt_dec, fmt_q
from .pipeline import SolveOptions, solve, verify_solution

GENERATORS = ("random", "gap", "baddfs")


class SuiteSpecError(ValueError):
    pass


@dataclass
class ExperimentRow:
    instance_id: int
    seed: int | None
    n: int
    m_light: int
    lp_cost: Fraction | None = None
    total_cost: int | None = None
    opt_cost: int | None = None
    ratio_vs_lp: Fraction | None = None
    ratio_vs_opt: Fraction | None = None
    n_tight: int | None = None
    fractional_edge_count: int | None = None
    unguided_total: int | None = None
    unguided_ratio_vs_opt: Fraction | None = None
    runtime_ms: float = 0.0
    violations: list[str] = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and not self.violations


def check_report(inst: MapInstance, h, report) -> list[str]:
    """Every per-run property the algorithm promises; returns the broken ones."""
    bad = []
    if not verify_solution(inst, h):
        bad.append("solution is not 2-edge-connected or misses a light edge")
    if report.guided and report.total_cost != report.tree_heavy_cost + report.aug_size:
        bad.append("total_cost != tree_heavy_cost + aug_size")
    if report.lp_cost < inst.n - len(inst.light):
        bad.append("lp_cost < n - |M|")
    if report.opt_cost is not None:
        if not report.lp_cost <= report.opt_cost <= report.total_cost:
            bad.append("lp_cost <= opt_cost <= total_cost fails")
    if report.guided:
        if not report.ratio_vs_lp < 2:
            bad.append("ratio_vs_lp >= 2")
        if report.ratio_vs_lp > 2 - report.f_min_support:
            bad.append("ratio_vs_lp > 2 - f_min_support")
    d = report.diagnostics
    if d is not None:
        if not d.x_prime_feasible:
            bad.append("x' infeasible for the tree LP")
        if d.x_prime_cost > report.lp_cost / (1 + d.gamma) + d.gamma * d.n_tight:
            bad.append("c(x') bound fails")
        if d.cost_in_tree > report.lp_cost:
            bad.append("c(x*_T) > lp_cost")
        if d.node_cut_violations:
            bad.append(f"node-cut check fails at {list(d.node_cut_violations)}")
        if not d.scaled_feasible:
            bad.append("scaled solution infeasible")
        if report.aug_size > d.scaled_total:
            bad.append("|A| > sum of scaled y")
        if report.aug_size > d.restricted_total:
            bad.append("|A| > sum of restricted x")
    return bad


def build_instances(spec: dict[str, Any]) -> list[tuple[int | None, MapInstance]]:
    gen = spec.get("generator")
    sizes = spec.get("sizes")
    if gen not in GENERATORS:
        raise SuiteSpecError(f"generator must be one of {GENERATORS}")
    if not sizes or not all(isinstance(s, int) for s in sizes):
        raise SuiteSpecError("sizes must be a non-empty list of integers")
    if gen == "gap":
        return [(None, gen_gap_instance(k)) for k in sizes]
    if gen == "baddfs":
        return [(None, gen_bad_dfs_instance(d)) for d in sizes]
    count = spec.get("count", 1)
    extra = spec.get("extra_heavy")
    return random_suite(count, sizes, spec.get("seed", 0), tuple(extra) if extra else None)


def _run_one(args) -> ExperimentRow:
    idx, seed, inst, opts, compare = args
    row = ExperimentRow(idx, seed, inst.n, len(inst.light))
    start = time.perf_counter()
    try:
        h, rep = solve(inst, 0, opts)
        row.lp_cost = rep.lp_cost
        row.total_cost = rep.total_cost
        row.opt_cost = rep.opt_cost
        row.ratio_vs_lp = rep.ratio_vs_lp
        row.ratio_vs_opt = rep.ratio_vs_opt
        if rep.diagnostics is not None:
            row.n_tight = rep.diagnostics.n_tight
            row.fractional_edge_count = rep.diagnostics.fractional_edge_count
        row.violations = check_report(inst, h, rep)
        if compare:
            base = SolveOptions(guided=False)
            _, urep = solve(inst, 0, base, lp=rep.lp)
            row.unguided_total = urep.total_cost
            if rep.opt_cost:
                row.unguided_ratio_vs_opt = Fraction(urep.total_cost, rep.opt_cost)
    except Exception as exc:  # recorded per row, never fatal to the suite
        row.error = f"{type(exc).__name__}: {exc}"
    row.runtime_ms = (time.perf_counter() - start) * 1000
    return row


def run_experiment(spec: dict[str, Any]) -> tuple[list[ExperimentRow], dict[str, Any]]:
    instances = build_instances(spec)
    opts = SolveOptions(oracle=bool(spec.get("oracle", False)),
                        diagnostics=bool(spec.get("diagnostics", True)))
    compare = bool(spec.get("compare_unguided", False))
    jobs = [(i, seed, inst, opts, compare) for i, (seed, inst) in enumerate(instances)]
    workers = int(spec.get("workers", 1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_run_one, jobs))
    else:
        rows = [_run_one(j) for j in jobs]
    rows.sort(key=lambda r: r.instance_id)
    return rows, summarize(rows)


def summarize(rows: list[ExperimentRow]) -> dict[str, Any]:
    done = [r for r in rows if r.error is None]
    ratios = [r.ratio_vs_lp for r in done]
    out: dict[str, Any] = {
        "instances": len(rows),
        "errors": sum(1 for r in rows if r.error is not None),
        "invariant_failures": sum(1 for r in rows if r.violations),
        "sum_lp_cost": fmt_q(sum((r.lp_cost for r in done), Fraction(0))),
        "sum_total_cost": sum(r.total_cost for r in done),
        "all_ok": all(r.ok for r in rows),
    }
    if ratios:
        mx = max(ratios)
        mean = sum(ratios, Fraction(0)) / len(ratios)
        out.update(max_ratio_vs_lp=fmt_q(mx), max_ratio_vs_lp_decimal=fmt_dec(mx),
                   mean_ratio_vs_lp=fmt_q(mean), mean_ratio_vs_lp_decimal=fmt_dec(mean))
    return out


def _q(v) -> str | None:
    return None if v is None else fmt_q(v)


def row_to_dict(row: ExperimentRow) -> dict[str, Any]:
    return {
        "instance_id": row.instance_id,
        "seed": row.seed,
        "n": row.n,
        "m_light": row.m_light,
        "lp_cost": _q(row.lp_cost),
        "total_cost": row.total_cost,
        "opt_cost": row.opt_cost,
        "ratio_vs_lp": _q(row.ratio_vs_lp),
        "ratio_vs_opt": _q(row.ratio_vs_opt),
        "n_tight": row.n_tight,
        "fractional_edge_count": row.fractional_edge_count,
        "unguided_total": row.unguided_total,
        "unguided_ratio_vs_opt": _q(row.unguided_ratio_vs_opt),
        "violations": row.violations,
        "error": row.error,
    }


def report_json(rows: list[ExperimentRow], summary: dict[str, Any]) -> dict[str, Any]:
    return {"rows": [row_to_dict(r) for r in rows], "summary": summary}


CSV_FIELDS = ["instance_id", "seed", "n", "m_light", "lp_cost", "lp_cost_decimal", "total_cost",
              "opt_cost", "ratio_vs_lp", "ratio_vs_lp_decimal", "ratio_vs_opt",
              "ratio_vs_opt_decimal", "n_tight", "fractional_edge_count", "unguided_total",
              "unguided_ratio_vs_opt", "runtime_ms", "ok", "error"]


def report_csv(rows: list[ExperimentRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        d = row_to_dict(r)
        w.writerow({
            **{k: d[k] for k in ("instance_id", "seed", "n", "m_light", "lp_cost", "total_cost",
                                 "opt_cost", "ratio_vs_lp", "ratio_vs_opt", "n_tight",
                                 "fractional_edge_count", "unguided_total",
                                 "unguided_ratio_vs_opt", "error")},
            "lp_cost_decimal": "" if r.lp_cost is None else fmt_dec(r.lp_cost),
            "ratio_vs_lp_decimal": "" if r.ratio_vs_lp is None else fmt_dec(r.ratio_vs_lp),
            "ratio_vs_opt_decimal": "" if r.ratio_vs_opt is None else fmt_dec(r.ratio_vs_opt),
            "runtime_ms": f"{r.runtime_ms:.3f}",
            "ok": int(r.ok),
        })
    return buf.getvalue()
