"""Per-process and aggregate performance metrics for schedule traces.

Aggregates are kept as exact rationals; the one-decimal rendering used for
display never feeds back into any comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .engine import ScheduleTrace
from .workload import Workload


class MetricsError(ValueError):
    """Raised when a trace does not belong to the given workload."""


@dataclass(frozen=True)
class ProcessMetrics:
    turnaround: int
    waiting: int
    response: int


@dataclass(frozen=True)
class MetricsSummary:
    per_process: Dict[int, ProcessMetrics]
    avg_turnaround: Fraction
    avg_waiting: Fraction
    context_switches: int


def merge_segments(trace: ScheduleTrace) -> List[Tuple[int, int, int]]:
    """Time-ordered (pid, start, end) runs with back-to-back grants of the
    same process coalesced."""
    merged: List[Tuple[int, int, int]] = []
    for seg in trace.segments:
        if merged and merged[-1][0] == seg.pid and merged[-1][2] == seg.start:
            pid, start, _ = merged[-1]
            merged[-1] = (pid, start, seg.end)
        else:
            merged.append((seg.pid, seg.start, seg.end))
    return merged


def count_context_switches(trace: ScheduleTrace) -> int:
    """Number of transitions between distinct processes in the merged trace."""
    return len(merge_segments(trace)) - 1


def compute_metrics(trace: ScheduleTrace, w: Workload) -> MetricsSummary:
    """Turnaround / waiting / response per process plus exact averages and the
    context-switch count.  All arrivals are at t=0, so TAT equals completion."""
    bursts = {p.pid: p.burst for p in w}
    executed = {pid: 0 for pid in bursts}
    first_start: Dict[int, int] = {}
    for seg in trace.segments:
        if seg.pid not in bursts:
            raise MetricsError(f"trace references unknown process P{seg.pid}")
        executed[seg.pid] += seg.end - seg.start
        first_start.setdefault(seg.pid, seg.start)
    for pid, total in executed.items():
        if total != bursts[pid]:
            raise MetricsError(
                f"P{pid} executed {total} units but has burst {bursts[pid]}"
            )

    per_process = {}
    for p in w:
        tat = trace.completion[p.pid]
        per_process[p.pid] = ProcessMetrics(
            turnaround=tat, waiting=tat - p.burst, response=first_start[p.pid]
        )

    n = len(w)
    avg_tat = Fraction(sum(m.turnaround for m in per_process.values()), n)
    avg_wt = Fraction(sum(m.waiting for m in per_process.values()), n)
    return MetricsSummary(
        per_process=per_process,
        avg_turnaround=avg_tat,
        avg_waiting=avg_wt,
        context_switches=count_context_switches(trace),
    )


def format_average(value: Fraction) -> str:
    """Exact one-decimal rendering (half away from zero), e.g. 364/5 -> '72.8'."""
    scaled = value * 10
    tenths = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    return f"{tenths // 10}.{tenths % 10}"
