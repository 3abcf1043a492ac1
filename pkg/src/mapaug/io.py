"""Instance files and JSON rendering of solver results.

Instance file: ``{"n": int, "edges": [{"u": int, "v": int, "w": 0|1}, ...]}``
with edge ids given by array position. Rationals are written as ``"p/q"``
strings, always with an explicit denominator.
"""

from __future__ import annotations

import json
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path
from typing import Any

from .graph import MapInstance


class InstanceFormatError(ValueError):
    pass


def fmt_q(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_q(s: str) -> Fraction:
    return Fraction(s)


def fmt_dec(q, digits: int = 12) -> str:
    """Fixed-point rendering with ``digits`` decimals (round half even)."""
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = 60
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return f"{d.quantize(Decimal(1).scaleb(-digits)):f}"


def instance_to_dict(inst: MapInstance) -> dict[str, Any]:
    return {
        "n": inst.n,
        "edges": [{"u": u, "v": v, "w": w} for (u, v), w in zip(inst.graph.edges, inst.weight)],
    }


def instance_from_dict(data: dict[str, Any]) -> MapInstance:
    try:
        n = data["n"]
        edges = [(e["u"], e["v"], e["w"]) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise InstanceFormatError(f"malformed instance document: {exc}") from exc
    if not isinstance(n, int) or any(not all(isinstance(t, int) for t in e) for e in edges):
        raise InstanceFormatError("n, u, v and w must be integers")
    try:
        return MapInstance.from_edges(n, edges)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc


def dumps_instance(inst: MapInstance) -> str:
    return json.dumps(instance_to_dict(inst), indent=1) + "\n"


def loads_instance(text: str) -> MapInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"not JSON: {exc}") from exc
    return instance_from_dict(data)


def save_instance(inst: MapInstance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(inst))


def load_instance(path: str | Path) -> MapInstance:
    return loads_instance(Path(path).read_text())


def _q_pair(name: str, q) -> dict[str, str]:
    return {name: fmt_q(q), name + "_decimal": fmt_dec(q)}


def lp_to_dict(sol) -> dict[str, Any]:
    cert = sol.basis_certificate
    return {
        "objective": fmt_q(sol.objective),
        "objective_decimal": fmt_dec(sol.objective),
        "x": [fmt_q(v) for v in sol.x],
        "support": sorted(sol.support),
        "basis_certificate": {
            "cuts": [sorted(s) for s in cert.cuts],
            "at_zero": sorted(cert.at_zero),
            "at_one": sorted(cert.at_one),
        },
        "rounds": sol.rounds,
    }


def report_to_dict(h, report) -> dict[str, Any]:
    """JSON-ready view of a solve; contains no timings, so it is byte-stable."""
    out: dict[str, Any] = {
        "guided": report.guided,
        "n": report.n,
        "matching_size": report.matching_size,
        "tree_heavy_cost": report.tree_heavy_cost,
        "aug_size": report.aug_size,
        "total_cost": report.total_cost,
        "solution_edges": sorted(h),
        "tree_edges": sorted(report.tree.tree_edges),
        "back_edges": {str(e): list(p) for e, p in sorted(report.tree.back_edges.items())},
        "augmentation": sorted(report.augmentation),
        "root": report.tree.root,
        "lp": lp_to_dict(report.lp),
    }
    out.update(_q_pair("lp_cost", report.lp_cost))
    out.update(_q_pair("ratio_vs_lp", report.ratio_vs_lp))
    out.update(_q_pair("f_min_support", report.f_min_support))
    out["opt_cost"] = report.opt_cost
    if report.ratio_vs_opt is not None:
        out.update(_q_pair("ratio_vs_opt", report.ratio_vs_opt))
    else:
        out["ratio_vs_opt"] = None
    d = report.diagnostics
    if d is not None:
        out["diagnostics"] = {
            "gamma": fmt_q(d.gamma),
            "epsilon": fmt_q(d.epsilon),
            "n_tight": d.n_tight,
            "s_sizes": list(d.s_sizes),
            "cost_in_tree": fmt_q(d.cost_in_tree),
            "x_prime": {str(e): fmt_q(v) for e, v in sorted(d.x_prime.items())},
            "x_prime_cost": fmt_q(d.x_prime_cost),
            "x_prime_feasible": d.x_prime_feasible,
            "fractional_edge_count": d.fractional_edge_count,
            "alpha_fractional_count": d.alpha_fractional_count,
            "node_cut_violations": list(d.node_cut_violations),
            "scaled_total": fmt_q(d.scaled_total),
            "scaled_feasible": d.scaled_feasible,
            "restricted_total": fmt_q(d.restricted_total),
        }
    return out


def dumps_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
