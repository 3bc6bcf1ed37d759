"""Command-line front end.

Exit status: 0 success, 1 bad input (schema/validation/empty), 2 verification
failure, 3 combination budget exceeded.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from pathlib import Path

from . import report
from .aggregate import MAX, MIN, worst_case
from .baseline import frame_direction_peak, naive_peak_sum, pessimism_reduction, pruned_envelope
from .bench import GenConfig, gen_case, run_corpus
from .casefile import case_file_from, parse_case
from .errors import CombinationBudgetExceeded, FrameError, ZeroBaseline
from .oracle import verify
from .svgplot import plot_series, render_svg, series_csv

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


def _range(text: str, cast=float) -> tuple:
    """Parse ``lo..hi`` or a single value into a closed range."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return cast(lo), cast(hi)
    v = cast(text)
    return v, v


def _write(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    cf = parse_case(args.case)
    results = {case.direction: worst_case(case) for case in cf.cases()}
    doc = report.analysis_document(cf.name, (cf.time_unit, cf.voltage_unit), results)
    render = {"table": report.render_text, "json": report.render_json, "csv": report.render_csv}[args.format]
    _write(render(doc), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    cf = parse_case(args.case)
    status = EXIT_OK
    for case in cf.cases():
        result = worst_case(case)
        if args.w_offset:
            result = dataclasses.replace(result, w_star=result.w_star + args.w_offset)
        rep = verify(case, result, args.grid)
        verdict = "ok" if rep.ok else "FAILED"
        print(
            f"[{case.direction}] frame_w={report.fmt(rep.frame_w)} oracle_w={report.fmt(rep.oracle_w)} "
            f"gap={report.fmt(rep.gap)} achieved={str(rep.achieved).lower()} "
            f"bounded={str(rep.bounded).lower()} grid={report.fmt(rep.grid_step)} "
            f"combinations={rep.combinations_evaluated} -> {verdict}"
        )
        if not rep.ok:
            status = EXIT_VERIFY
    return status


def cmd_compare(args) -> int:
    cf = parse_case(args.case)
    direction = None if args.direction == "both" else args.direction
    print(f"case: {cf.name}  (direction filter: {args.direction})")
    print(f"{'scenario':<8} {'FRAME':>12} {'pruned':>12} {'naive':>12} {'red_pruned%':>12} {'red_naive%':>12} kept")
    for case in cf.cases():
        frame = frame_direction_peak(worst_case(case), direction)
        pruned = pruned_envelope(case.attackers, direction)
        naive = naive_peak_sum(case.attackers).w
        cells = []
        for base in (pruned.w, naive):
            try:
                cells.append(f"{pessimism_reduction(base, frame):.9g}")
            except ZeroBaseline:
                cells.append("n/a")
        kept = ",".join(str(i) for i in sorted(pruned.kept)) or "-"
        print(
            f"{case.direction:<8} {report.fmt(frame):>12} {report.fmt(pruned.w):>12} {report.fmt(naive):>12} "
            f"{cells[0]:>12} {cells[1]:>12} {kept} ({pruned.direction})"
        )
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GenConfig(
        n_attackers=_range(args.n, int),
        window_width=_range(args.window_width),
        negative_prob=args.negative_prob,
        seed=args.seed,
    )
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for k in range(args.count):
        case = gen_case(cfg, k)
        (out / f"{case.name}.json").write_text(case_file_from(case).dumps())
    print(f"wrote {args.count} case files to {out}")
    return EXIT_OK


def cmd_bench(args) -> int:
    files = sorted(Path(args.directory).glob("*.json"))
    if not files:
        print(f"error: no case files in {args.directory}", file=sys.stderr)
        return EXIT_INPUT
    cases = []
    for path in files:
        for case in parse_case(path).cases():
            cases.append(dataclasses.replace(case, name=f"{path.stem}/{case.direction}"))
    rep = run_corpus(cases, args.grid)
    csv_path = Path(args.report)
    csv_path.write_text(rep.to_csv())
    json_path = csv_path.with_suffix(".json")
    json_path.write_text(rep.to_json())
    sys.stdout.write(rep.to_json())
    print(f"wrote {csv_path} and {json_path}")
    return EXIT_OK


def cmd_plot(args) -> int:
    cf = parse_case(args.case)
    cases = {c.direction: c for c in cf.cases()}
    direction = args.direction or next(iter(cases))
    if direction not in cases:
        print(f"error: scenario {direction!r} not in {cf.name}", file=sys.stderr)
        return EXIT_INPUT
    result = worst_case(cases[direction])
    svg = render_svg(result, title=f"{cf.name} [{direction}]", units=(cf.time_unit, cf.voltage_unit))
    Path(args.output).write_text(svg)
    if args.csv:
        Path(args.csv).write_text(series_csv(plot_series(result)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frame-noise", description="Worst-case crosstalk alignment via envelopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="worst-case magnitude, times and alignment")
    p.add_argument("case")
    p.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check against brute-force grid search")
    p.add_argument("case")
    p.add_argument("--grid", type=float, default=0.25)
    p.add_argument("--w-offset", type=float, default=0.0, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="FRAME versus pruning and naive baselines")
    p.add_argument("case")
    p.add_argument("--direction", choices=("both", MAX, MIN), default="both")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("gen", help="write seeded synthetic case files")
    p.add_argument("--n", default="1..6", help="attacker count or range lo..hi")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--negative-prob", type=float, default=0.3)
    p.add_argument("--window-width", default="0..1")
    p.add_argument("-o", "--output", default="corpus")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="analyse a directory of case files")
    p.add_argument("directory")
    p.add_argument("--grid", type=float, default=0.25)
    p.add_argument("--report", default="bench.csv")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("plot", help="SVG of envelopes and summed envelopes")
    p.add_argument("case")
    p.add_argument("-o", "--output", default="envelopes.svg")
    p.add_argument("--csv")
    p.add_argument("--direction", choices=("rise", "fall"))
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CombinationBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FrameError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
