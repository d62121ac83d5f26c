"""Round-driven dispatch loop.

One round gives every live process exactly one CPU grant.  The dispatch order
is recomputed once per round boundary (not after every grant), the clock
advances by the effective execution time of each grant, and a process leaves
the ready set exactly when its remaining burst hits zero.  ``simulate`` is a
pure function of (workload, policy).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Dict, Optional, Sequence, Tuple

from .workload import Workload

if TYPE_CHECKING:  # pragma: no cover
    from .schedulers import SchedulingPolicy


@dataclass(frozen=True)
class LiveProcess:
    """Snapshot of a not-yet-finished process at a round boundary."""

    pid: int
    rbt: int
    index: int  # submission position, 0-based


@dataclass(frozen=True)
class DispatchSegment:
    """One contiguous CPU grant.  ``quantum`` is the TQ assigned for the grant;
    the executed span ``end - start`` never exceeds it."""

    pid: int
    start: int
    end: int
    round: int
    quantum: int


@dataclass(frozen=True)
class ScheduleTrace:
    """Complete schedule: time-ordered segments plus per-process completion times."""

    segments: Tuple[DispatchSegment, ...]
    completion: Dict[int, int]

    @property
    def makespan(self) -> int:
        return self.segments[-1].end


# (round, live processes at round start) -> dispatch order for the round
OrderRule = Callable[[int, Sequence[LiveProcess]], Sequence[LiveProcess]]
# (pid, round, previous-round TQ or None, remaining burst) -> TQ for this grant
QuantumRule = Callable[[int, int, Optional[int], int], int]


def ceil_half(x: int) -> int:
    """Half of x, rounded up."""
    return (x + 1) // 2


def proposed_quantum(
    its: int, sc: int, round_no: int, prev_tq: Optional[int], rbt: int
) -> int:
    """Dynamic time quantum of the proposed policy (also used by PBDRR).

    Round 1 starts from the ITS: half of it (rounded up) for SC=0 processes,
    the full ITS for SC=1.  Later rounds grow the previous quantum: *1.5
    (rounded up) for SC=0, *2 for SC=1.  If the leftover after the grant would
    be two units or less, the quantum becomes the remaining burst so the
    process finishes without another dispatch.
    """
    if rbt < 1:
        raise ValueError(f"rbt must be >= 1, got {rbt}")
    if round_no == 1:
        base = its if sc else ceil_half(its)
    else:
        if prev_tq is None:
            raise ValueError("prev_tq required for rounds after the first")
        base = 2 * prev_tq if sc else prev_tq + ceil_half(prev_tq)
    if rbt - base <= 2:
        return rbt
    return base


def simulate(w: Workload, policy: "SchedulingPolicy") -> ScheduleTrace:
    """Run ``policy`` over ``w`` until every process completes."""
    rbt = {p.pid: p.burst for p in w}
    prev_tq: Dict[int, int] = {}
    segments = []
    clock = 0
    round_no = 1
    live = [LiveProcess(p.pid, p.burst, i) for i, p in enumerate(w)]
    while live:
        for proc in policy.order(round_no, live):
            tq = policy.quantum(proc.pid, round_no, prev_tq.get(proc.pid), rbt[proc.pid])
            if tq < 1:
                raise ValueError(
                    f"policy {policy.name!r} produced TQ {tq} for P{proc.pid}"
                )
            run = min(tq, rbt[proc.pid])
            segments.append(DispatchSegment(proc.pid, clock, clock + run, round_no, tq))
            clock += run
            rbt[proc.pid] -= run
            prev_tq[proc.pid] = tq
        live = [
            LiveProcess(p.pid, rbt[p.pid], p.index) for p in live if rbt[p.pid] > 0
        ]
        round_no += 1
    completion = {}
    for seg in segments:
        completion[seg.pid] = seg.end
    return ScheduleTrace(tuple(segments), completion)
