"""CLI entry point and rendering/export helpers.

Subcommands: ``simulate`` (one workload, one policy), ``compare`` (one
workload, several policies), ``generate`` (synthetic workload CSV), and
``components`` (the OTS/PC/SC/CSC/ITS table).  ``--json``/``--csv`` write
machine-readable copies of whatever is printed.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import references
from .engine import DispatchSegment, ScheduleTrace, simulate
from .metrics import MetricsSummary, compute_metrics, format_average, merge_segments
from .schedulers import DEFAULT_STATIC_OTS, SchedulingPolicy, policy_from_name
from .timeslice import SliceComponents, compute_components
from .workload import (
    Workload,
    WorkloadError,
    generate_workload,
    parse_workload,
    serialize_workload,
    workload,
)


class ReportError(ValueError):
    """Raised for CLI-level problems (unknown policy, unreadable input...)."""


# ---------------------------------------------------------------------------
# rendering


def render_gantt(trace: ScheduleTrace) -> str:
    """ASCII Gantt chart: one row of process labels over one row of boundary
    timestamps; back-to-back grants of the same process render as one cell."""
    merged = merge_segments(trace)
    labels = [f"P{pid}" for pid, _, _ in merged]
    boundaries = [str(merged[0][1])] + [str(end) for _, _, end in merged]

    label_line = "|"
    positions = [0]
    for i, label in enumerate(labels):
        width = max(len(label) + 2, len(boundaries[i]), len(boundaries[i + 1]))
        label_line += " " + label + " " * (width - len(label) - 1) + "|"
        positions.append(len(label_line) - 1)
    time_line = ""
    for pos, boundary in zip(positions, boundaries):
        pad = max(pos - len(time_line), 1 if time_line else 0)
        time_line += " " * pad + boundary
    return label_line + "\n" + time_line.rstrip()


def _render_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def render_metrics(summary: MetricsSummary, w: Workload) -> str:
    rows = []
    for p in w:
        m = summary.per_process[p.pid]
        rows.append([
            f"P{p.pid}", str(p.burst), str(p.priority),
            str(m.turnaround), str(m.waiting), str(m.response),
        ])
    table = _render_table(
        ["process", "burst", "priority", "turnaround", "waiting", "response"], rows
    )
    return (
        table
        + f"\n\navg turnaround: {format_average(summary.avg_turnaround)}"
        + f"\navg waiting:    {format_average(summary.avg_waiting)}"
        + f"\ncontext switches: {summary.context_switches}"
    )


def render_components_table(
    w: Workload,
    comps: Sequence[SliceComponents],
    notes: Sequence[str] = (),
) -> str:
    rows = []
    for p, c in zip(w, comps):
        rows.append([
            f"P{p.pid}", str(p.burst), str(p.priority),
            str(c.ots), str(c.pc), str(c.sc), str(c.csc), str(c.its),
        ])
    out = _render_table(
        ["process", "burst", "priority", "OTS", "PC", "SC", "CSC", "ITS"], rows
    )
    out += f"\n\nrange: {comps[0].slice_range}"
    if notes:
        out += "\n" + "\n".join(f"note: {n}" for n in notes)
    return out


def render_comparison(
    w: Workload, results: Sequence[Tuple[str, MetricsSummary]]
) -> str:
    rows = [
        [name, format_average(s.avg_turnaround), format_average(s.avg_waiting),
         str(s.context_switches)]
        for name, s in results
    ]
    return _render_table(["policy", "avg TAT", "avg WT", "CS"], rows)


# ---------------------------------------------------------------------------
# machine-readable export


def _average_to_dict(value: Fraction) -> Dict[str, object]:
    return {
        "display": format_average(value),
        "num": value.numerator,
        "den": value.denominator,
    }


def workload_to_dicts(w: Workload) -> List[Dict[str, int]]:
    return [{"id": p.pid, "burst": p.burst, "priority": p.priority} for p in w]


def trace_to_dict(w: Workload, policy_name: str, trace: ScheduleTrace) -> Dict[str, object]:
    return {
        "workload": workload_to_dicts(w),
        "policy": policy_name,
        "segments": [
            {"pid": s.pid, "start": s.start, "end": s.end,
             "round": s.round, "quantum": s.quantum}
            for s in trace.segments
        ],
        "completion": {str(pid): t for pid, t in sorted(trace.completion.items())},
    }


def trace_from_dict(data: Dict[str, object]) -> Tuple[Workload, str, ScheduleTrace]:
    """Inverse of :func:`trace_to_dict`."""
    w = workload(
        [row["burst"] for row in data["workload"]],
        [row["priority"] for row in data["workload"]],
    )
    segments = tuple(
        DispatchSegment(s["pid"], s["start"], s["end"], s["round"], s["quantum"])
        for s in data["segments"]
    )
    completion = {int(pid): t for pid, t in data["completion"].items()}
    return w, data["policy"], ScheduleTrace(segments, completion)


def metrics_to_dict(name: str, summary: MetricsSummary) -> Dict[str, object]:
    return {
        "policy": name,
        "avg_turnaround": _average_to_dict(summary.avg_turnaround),
        "avg_waiting": _average_to_dict(summary.avg_waiting),
        "context_switches": summary.context_switches,
        "per_process": {
            str(pid): {
                "turnaround": m.turnaround,
                "waiting": m.waiting,
                "response": m.response,
            }
            for pid, m in sorted(summary.per_process.items())
        },
    }


def _write_json(data: object, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _write_text(text: str, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")


# ---------------------------------------------------------------------------
# CLI


def _parse_range(text: str) -> Tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise ReportError(f"bad range {text!r}; expected lo:hi") from None


def _load_workload(path: str) -> Workload:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ReportError(f"cannot read workload file {path}: {exc}") from None
    try:
        return parse_workload(text)
    except WorkloadError as exc:
        raise ReportError(f"{path}: {exc}") from None


def _resolve_policy(args, w: Workload) -> SchedulingPolicy:
    name = args.policy
    if name == "rr" and args.quantum is not None:
        name = f"rr:{args.quantum}"
    try:
        return policy_from_name(name, w, args.static_ots)
    except ValueError as exc:
        raise ReportError(str(exc)) from None


def _cmd_simulate(args, out) -> None:
    w = _load_workload(args.workload)
    policy = _resolve_policy(args, w)
    trace = simulate(w, policy)
    summary = compute_metrics(trace, w)
    print(f"policy: {policy.name}", file=out)
    print(render_gantt(trace), file=out)
    print(file=out)
    print(render_metrics(summary, w), file=out)
    if args.paper_notes:
        static = args.static_ots if policy.name in ("pbdrr", "its-rr") else None
        for note in references.quantum_notes(w, policy.name, trace, static):
            print(f"note: {note}", file=out)
    if args.json:
        data = trace_to_dict(w, policy.name, trace)
        data["metrics"] = metrics_to_dict(policy.name, summary)
        _write_json(data, args.json)
    if args.csv:
        lines = ["pid,start,end,round,quantum"]
        lines += [
            f"{s.pid},{s.start},{s.end},{s.round},{s.quantum}" for s in trace.segments
        ]
        _write_text("\n".join(lines), args.csv)


def _cmd_compare(args, out) -> None:
    w = _load_workload(args.workload)
    names = [n.strip() for n in args.policies.split(",") if n.strip()]
    if not names:
        raise ReportError("no policies given")
    results = []
    for name in names:
        args.policy = name
        policy = _resolve_policy(args, w)
        trace = simulate(w, policy)
        results.append((policy.name, compute_metrics(trace, w), trace))
    print(render_comparison(w, [(n, s) for n, s, _ in results]), file=out)
    if args.json:
        _write_json(
            {
                "workload": workload_to_dicts(w),
                "metrics": [metrics_to_dict(n, s) for n, s, _ in results],
                "traces": {
                    n: trace_to_dict(w, n, t)["segments"] for n, _, t in results
                },
            },
            args.json,
        )
    if args.csv:
        lines = ["policy,avg_tat,avg_wt,context_switches"]
        lines += [
            f"{n},{format_average(s.avg_turnaround)},"
            f"{format_average(s.avg_waiting)},{s.context_switches}"
            for n, s, _ in results
        ]
        _write_text("\n".join(lines), args.csv)


def _cmd_generate(args, out) -> None:
    try:
        w = generate_workload(
            args.n, args.order, args.burst_range, args.priority_range, args.seed
        )
    except WorkloadError as exc:
        raise ReportError(str(exc)) from None
    text = serialize_workload(w)
    print(text, end="", file=out)
    if args.csv:
        _write_text(text, args.csv)
    if args.json:
        _write_json({"workload": workload_to_dicts(w)}, args.json)


def _cmd_components(args, out) -> None:
    w = _load_workload(args.workload)
    static = args.static_ots if args.use_static_ots else None
    comps = compute_components(w, static_ots=static)
    notes = references.component_notes(w, comps, static) if args.paper_notes else ()
    print(render_components_table(w, comps, notes), file=out)
    if args.json:
        _write_json(
            {
                "workload": workload_to_dicts(w),
                "range": {
                    "num": comps[0].slice_range.numerator,
                    "den": comps[0].slice_range.denominator,
                },
                "components": [
                    {"pid": p.pid, "ots": c.ots, "pc": c.pc, "sc": c.sc,
                     "csc": c.csc, "its": c.its}
                    for p, c in zip(w, comps)
                ],
            },
            args.json,
        )
    if args.csv:
        lines = ["pid,burst,priority,ots,pc,sc,csc,its"]
        lines += [
            f"{p.pid},{p.burst},{p.priority},{c.ots},{c.pc},{c.sc},{c.csc},{c.its}"
            for p, c in zip(w, comps)
        ]
        _write_text("\n".join(lines), args.csv)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrsim",
        description="Deterministic single-CPU scheduling simulator with dynamic"
        " time-slice round robin and classical baselines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, policies=False, single_policy=False):
        p.add_argument("--json", metavar="PATH", help="write JSON copy of the output")
        p.add_argument("--csv", metavar="PATH", help="write CSV copy of the output")
        p.add_argument(
            "--static-ots", type=int, default=DEFAULT_STATIC_OTS,
            help="static OTS constant used by its-rr/pbdrr (default 4)",
        )
        if single_policy:
            p.add_argument("--policy", required=True,
                           help="proposed | pbdrr | its-rr | rr:<q> | srtn | fcfs")
            p.add_argument("--quantum", type=int, default=None,
                           help="quantum for '--policy rr' (alternative to rr:<q>)")
        if policies:
            p.add_argument("--policies", required=True,
                           help="comma-separated policy names")

    p_sim = sub.add_parser("simulate", help="run one policy and print Gantt + metrics")
    p_sim.add_argument("--workload", required=True, metavar="CSV")
    p_sim.add_argument("--paper-notes", action="store_true",
                       help="annotate cells where published reference values differ")
    add_common(p_sim, single_policy=True)
    p_sim.set_defaults(func=_cmd_simulate)

    p_cmp = sub.add_parser("compare", help="run several policies and print a table")
    p_cmp.add_argument("--workload", required=True, metavar="CSV")
    add_common(p_cmp, policies=True)
    p_cmp.add_argument("--quantum", type=int, default=None, help=argparse.SUPPRESS)
    p_cmp.set_defaults(func=_cmd_compare, policy=None)

    p_gen = sub.add_parser("generate", help="emit a synthetic workload CSV")
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--order", choices=("increasing", "decreasing", "random"),
                       required=True)
    p_gen.add_argument("--burst-range", type=_parse_range, default=(1, 100),
                       metavar="LO:HI")
    p_gen.add_argument("--priority-range", type=_parse_range, default=(1, 5),
                       metavar="LO:HI")
    p_gen.add_argument("--seed", type=int, default=0)
    add_common(p_gen)
    p_gen.set_defaults(func=_cmd_generate)

    p_cmp2 = sub.add_parser("components", help="print the slice-component table")
    p_cmp2.add_argument("--workload", required=True, metavar="CSV")
    p_cmp2.add_argument("--use-static-ots", action="store_true",
                        help="use the static OTS constant instead of the dynamic one")
    p_cmp2.add_argument("--paper-notes", action="store_true",
                        help="annotate cells where published reference values differ")
    add_common(p_cmp2)
    p_cmp2.set_defaults(func=_cmd_components)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except (ReportError, WorkloadError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
