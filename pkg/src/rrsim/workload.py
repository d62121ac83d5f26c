"""Process workload definitions, CSV parsing/serialization, and synthetic generation."""
from __future__ import annotations

import csv
import random
from dataclasses import dataclass
from typing import Iterator, Tuple

CSV_HEADER = ("id", "burst", "priority")
ORDERS = ("increasing", "decreasing", "random")


class WorkloadError(ValueError):
    """Raised for structurally invalid workloads or malformed workload CSV."""


@dataclass(frozen=True)
class ProcessSpec:
    """One process: integer id, CPU burst in time units, user priority (1 = most urgent)."""

    pid: int
    burst: int
    priority: int

    def __post_init__(self) -> None:
        if self.pid < 1:
            raise WorkloadError(f"process id must be a positive integer, got {self.pid}")
        if self.burst < 1:
            raise WorkloadError(f"burst time must be >= 1, got {self.burst} (P{self.pid})")
        if self.priority < 1:
            raise WorkloadError(f"priority must be >= 1, got {self.priority} (P{self.pid})")


@dataclass(frozen=True)
class Workload:
    """Ordered set of processes; list order is the submission order and is meaningful
    (the shortness component compares each burst against its predecessor)."""

    processes: Tuple[ProcessSpec, ...]

    def __post_init__(self) -> None:
        if not self.processes:
            raise WorkloadError("workload must contain at least one process")
        object.__setattr__(self, "processes", tuple(self.processes))
        seen = set()
        for p in self.processes:
            if p.pid in seen:
                raise WorkloadError(f"duplicate process id {p.pid}")
            seen.add(p.pid)

    def __len__(self) -> int:
        return len(self.processes)

    def __iter__(self) -> Iterator[ProcessSpec]:
        return iter(self.processes)

    @property
    def bursts(self) -> Tuple[int, ...]:
        return tuple(p.burst for p in self.processes)

    @property
    def priorities(self) -> Tuple[int, ...]:
        return tuple(p.priority for p in self.processes)

    @property
    def pids(self) -> Tuple[int, ...]:
        return tuple(p.pid for p in self.processes)

    @property
    def total_burst(self) -> int:
        return sum(p.burst for p in self.processes)


def workload(bursts, priorities=None) -> Workload:
    """Convenience constructor: ids 1..n in order, default priority 1."""
    if priorities is None:
        priorities = [1] * len(bursts)
    if len(priorities) != len(bursts):
        raise WorkloadError("bursts and priorities must have equal length")
    return Workload(tuple(
        ProcessSpec(i + 1, b, pr) for i, (b, pr) in enumerate(zip(bursts, priorities))
    ))


def _parse_int(field: str, value: str, row_no: int) -> int:
    try:
        return int(value.strip())
    except ValueError:
        raise WorkloadError(f"row {row_no}: {field} is not an integer: {value!r}") from None


def parse_workload(text: str) -> Workload:
    """Parse CSV with header ``id,burst,priority`` (an optional ``arrival`` column is
    accepted but must be zero everywhere; the model has no arrival events)."""
    rows = list(csv.reader(text.splitlines()))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows:
        raise WorkloadError("empty workload CSV")
    header = tuple(cell.strip().lower() for cell in rows[0])
    if header not in (CSV_HEADER, CSV_HEADER + ("arrival",)):
        raise WorkloadError(
            f"bad header {','.join(header)!r}; expected 'id,burst,priority'"
        )
    has_arrival = len(header) == 4
    if len(rows) == 1:
        raise WorkloadError("workload CSV has no data rows")

    processes = []
    for row_no, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise WorkloadError(
                f"row {row_no}: expected {len(header)} fields, got {len(row)}"
            )
        pid = _parse_int("id", row[0], row_no)
        burst = _parse_int("burst", row[1], row_no)
        priority = _parse_int("priority", row[2], row_no)
        if burst < 1:
            raise WorkloadError(f"row {row_no}: non-positive burst {burst}")
        if priority < 1:
            raise WorkloadError(f"row {row_no}: priority must be >= 1, got {priority}")
        if has_arrival:
            arrival = _parse_int("arrival", row[3], row_no)
            if arrival != 0:
                raise WorkloadError(
                    f"row {row_no}: nonzero arrival time {arrival} is unsupported by"
                    " the model (all processes are present at t=0)"
                )
        try:
            processes.append(ProcessSpec(pid, burst, priority))
        except WorkloadError as exc:
            raise WorkloadError(f"row {row_no}: {exc}") from None

    try:
        return Workload(tuple(processes))
    except WorkloadError as exc:
        raise WorkloadError(str(exc)) from None


def serialize_workload(w: Workload) -> str:
    """Inverse of :func:`parse_workload`: exact header plus one row per process in order."""
    lines = [",".join(CSV_HEADER)]
    lines.extend(f"{p.pid},{p.burst},{p.priority}" for p in w)
    return "\n".join(lines) + "\n"


def generate_workload(
    n: int,
    order: str,
    burst_range: Tuple[int, int],
    priority_range: Tuple[int, int],
    seed: int,
) -> Workload:
    """Deterministically generate ``n`` processes with bursts shaped per ``order``
    (increasing / decreasing / random) and priorities uniform in ``priority_range``."""
    if n < 1:
        raise WorkloadError(f"n must be >= 1, got {n}")
    if order not in ORDERS:
        raise WorkloadError(f"order must be one of {ORDERS}, got {order!r}")
    for name, (lo, hi) in (("burst", burst_range), ("priority", priority_range)):
        if not (1 <= lo <= hi):
            raise WorkloadError(f"invalid {name} range [{lo}, {hi}]")

    rng = random.Random(seed)
    bursts = [rng.randint(*burst_range) for _ in range(n)]
    if order == "increasing":
        bursts.sort()
    elif order == "decreasing":
        bursts.sort(reverse=True)
    priorities = [rng.randint(*priority_range) for _ in range(n)]
    return workload(bursts, priorities)
