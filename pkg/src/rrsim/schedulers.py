"""Concrete scheduling policies.

A policy is an ordering rule (how the live set is arranged at each round
boundary) plus a quantum rule (how big each grant is).  The proposed policy
re-sorts by remaining burst every round and uses the dynamic ITS-based
quantum; the two comparator policies keep submission order; the classical
baselines (RR, SRTN, FCFS) are included for cross-checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from .engine import LiveProcess, OrderRule, QuantumRule, proposed_quantum
from .timeslice import compute_components
from .workload import Workload

DEFAULT_STATIC_OTS = 4

POLICY_NAMES = ("proposed", "pbdrr", "its-rr", "rr:<q>", "srtn", "fcfs")


@dataclass(frozen=True)
class SchedulingPolicy:
    name: str
    order: OrderRule
    quantum: QuantumRule


def _by_remaining(round_no: int, live: Sequence[LiveProcess]) -> List[LiveProcess]:
    # SRTN ordering; pid breaks ties so traces stay deterministic
    return sorted(live, key=lambda p: (p.rbt, p.pid))


def _by_submission(round_no: int, live: Sequence[LiveProcess]) -> List[LiveProcess]:
    return sorted(live, key=lambda p: p.index)


def proposed_policy(w: Workload) -> SchedulingPolicy:
    """Dynamic RR + SRTN: ascending-rbt order each round, ITS-derived quantum."""
    comps = compute_components(w)
    its = {p.pid: c.its for p, c in zip(w, comps)}
    sc = {p.pid: c.sc for p, c in zip(w, comps)}

    def quantum(pid: int, round_no: int, prev_tq: Optional[int], rbt: int) -> int:
        return proposed_quantum(its[pid], sc[pid], round_no, prev_tq, rbt)

    return SchedulingPolicy("proposed", _by_remaining, quantum)


def pbdrr_policy(w: Workload, static_ots: int = DEFAULT_STATIC_OTS) -> SchedulingPolicy:
    """Priority-based dynamic RR comparator: fixed submission order every round,
    same dynamic quantum rules, but ITS built from a static OTS constant."""
    comps = compute_components(w, static_ots=static_ots)
    its = {p.pid: c.its for p, c in zip(w, comps)}
    sc = {p.pid: c.sc for p, c in zip(w, comps)}

    def quantum(pid: int, round_no: int, prev_tq: Optional[int], rbt: int) -> int:
        return proposed_quantum(its[pid], sc[pid], round_no, prev_tq, rbt)

    return SchedulingPolicy("pbdrr", _by_submission, quantum)


def static_its_rr_policy(
    w: Workload, static_ots: int = DEFAULT_STATIC_OTS
) -> SchedulingPolicy:
    """Static-ITS RR comparator: cyclic submission order, the full ITS granted
    on every visit, no quantum growth and no finish-early rule."""
    comps = compute_components(w, static_ots=static_ots)
    its = {p.pid: c.its for p, c in zip(w, comps)}

    def quantum(pid: int, round_no: int, prev_tq: Optional[int], rbt: int) -> int:
        return its[pid]

    return SchedulingPolicy("its-rr", _by_submission, quantum)


def classic_rr_policy(q: int) -> SchedulingPolicy:
    """Textbook round robin with a fixed quantum."""
    if q < 1:
        raise ValueError(f"quantum must be >= 1, got {q}")

    def quantum(pid: int, round_no: int, prev_tq: Optional[int], rbt: int) -> int:
        return q

    return SchedulingPolicy(f"rr:{q}", _by_submission, quantum)


def srtn_policy() -> SchedulingPolicy:
    """Shortest remaining time next.  With every arrival at t=0 this runs the
    processes to completion in ascending-burst order (ties by pid)."""

    def quantum(pid: int, round_no: int, prev_tq: Optional[int], rbt: int) -> int:
        return rbt

    return SchedulingPolicy("srtn", _by_remaining, quantum)


def fcfs_policy() -> SchedulingPolicy:
    """First come first served: submission order, one grant per process."""

    def quantum(pid: int, round_no: int, prev_tq: Optional[int], rbt: int) -> int:
        return rbt

    return SchedulingPolicy("fcfs", _by_submission, quantum)


def policy_from_name(
    name: str, w: Workload, static_ots: int = DEFAULT_STATIC_OTS
) -> SchedulingPolicy:
    """Resolve a CLI policy name (``proposed``, ``pbdrr``, ``its-rr``,
    ``rr:<q>``, ``srtn``, ``fcfs``)."""
    name = name.strip().lower()
    if name == "proposed":
        return proposed_policy(w)
    if name == "pbdrr":
        return pbdrr_policy(w, static_ots)
    if name == "its-rr":
        return static_its_rr_policy(w, static_ots)
    if name == "srtn":
        return srtn_policy()
    if name == "fcfs":
        return fcfs_policy()
    if name.startswith("rr:"):
        try:
            q = int(name[3:])
        except ValueError:
            raise ValueError(f"bad quantum in policy name {name!r}") from None
        return classic_rr_policy(q)
    raise ValueError(
        f"unknown policy {name!r}; expected one of {', '.join(POLICY_NAMES)}"
    )
