"""Text, JSON and CSV renderings of analysis results."""

from __future__ import annotations

import csv
import io
import json

from .aggregate import AnalysisResult
from .envelope import build_inner, build_outer


def fmt(x: float) -> str:
    return f"{x:.9g}"


def sig(x):
    """Round floats (recursively) to 9 significant digits."""
    if isinstance(x, float):
        return float(fmt(x))
    if isinstance(x, dict):
        return {k: sig(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [sig(v) for v in x]
    return x


def scenario_dict(direction: str, result: AnalysisResult) -> dict:
    envelopes = []
    for att in result.attackers:
        for env in (build_outer(att), build_inner(att)):
            envelopes.append(
                {
                    "attacker": att.index,
                    "kind": env.kind,
                    "vertices": [[vx.t, vx.v, vx.s_l, vx.s_r] for vx in env.vertices],
                }
            )
    return {
        "direction": direction,
        "n": len(result.attackers),
        "w_star": result.w_star,
        "signed_peak": result.signed_peak,
        "achieved_on": result.achieved_on,
        "t_star": result.t_star,
        "t_star_all": list(result.t_star_all),
        "s_star": list(result.s_star),
        "s_star_by_t": [{"t": t, "s": list(result.sigma_at(t))} for t in result.t_star_all],
        "attackers": [dict(index=att.index, **att.as_dict()) for att in result.attackers],
        "envelopes": envelopes,
    }


def analysis_document(name: str, units: tuple, results: dict) -> dict:
    return sig(
        {
            "name": name,
            "time_unit": units[0],
            "voltage_unit": units[1],
            "scenarios": [scenario_dict(d, r) for d, r in results.items()],
        }
    )


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def render_text(doc: dict) -> str:
    tu, vu = doc["time_unit"], doc["voltage_unit"]
    lines = [f"case: {doc['name']}"]
    for sc in doc["scenarios"]:
        lines.append("")
        lines.append(f"[{sc['direction']}]  n={sc['n']}")
        lines.append(f"  W*        = {fmt(sc['w_star'])} {vu}  (on E_{sc['achieved_on']}, signed {fmt(sc['signed_peak'])})")
        lines.append(f"  t*        = {fmt(sc['t_star'])} {tu}")
        lines.append(f"  t* (all)  = {', '.join(fmt(t) for t in sc['t_star_all'])}")
        for entry in sc["s_star_by_t"]:
            shifts = ", ".join(fmt(s) for s in entry["s"])
            lines.append(f"  S* @ t={fmt(entry['t'])}: ({shifts})")
        lines.append("  envelopes:")
        lines.append(f"    {'att':>3} {'kind':<5} {'t':>12} {'V':>12} {'s_L':>12} {'s_R':>12}")
        for env in sc["envelopes"]:
            for t, v, sl, sr in env["vertices"]:
                lines.append(
                    f"    {env['attacker']:>3} {env['kind']:<5} {fmt(t):>12} {fmt(v):>12} {fmt(sl):>12} {fmt(sr):>12}"
                )
    return "\n".join(lines) + "\n"


def render_csv(doc: dict) -> str:
    """One row per scenario and worst-case time."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("case", "direction", "n", "w_star", "achieved_on", "t_star", "canonical", "s_star"))
    for sc in doc["scenarios"]:
        for entry in sc["s_star_by_t"]:
            writer.writerow(
                (
                    doc["name"],
                    sc["direction"],
                    sc["n"],
                    fmt(sc["w_star"]),
                    sc["achieved_on"],
                    fmt(entry["t"]),
                    int(entry["t"] == sc["t_star"]),
                    " ".join(fmt(s) for s in entry["s"]),
                )
            )
    return buf.getvalue()
