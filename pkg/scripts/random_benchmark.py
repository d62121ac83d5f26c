#!/usr/bin/env python3
"""Sweep synthetic workloads and compare the policies' average metrics.

Usage: random_benchmark.py [runs] [n] [order]
"""
import pathlib
import sys
from fractions import Fraction

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from rrsim import compute_metrics, generate_workload, simulate  # noqa: E402
from rrsim.metrics import format_average  # noqa: E402
from rrsim.schedulers import (  # noqa: E402
    classic_rr_policy,
    fcfs_policy,
    pbdrr_policy,
    proposed_policy,
    srtn_policy,
    static_its_rr_policy,
)

POLICIES = (
    ("its-rr", static_its_rr_policy),
    ("pbdrr", pbdrr_policy),
    ("proposed", proposed_policy),
    ("rr:5", lambda w: classic_rr_policy(5)),
    ("srtn", lambda w: srtn_policy()),
    ("fcfs", lambda w: fcfs_policy()),
)


def main(argv):
    runs = int(argv[1]) if len(argv) > 1 else 200
    n = int(argv[2]) if len(argv) > 2 else 10
    order = argv[3] if len(argv) > 3 else "random"

    totals = {name: [Fraction(0), Fraction(0), 0] for name, _ in POLICIES}
    for seed in range(runs):
        w = generate_workload(n, order, (1, 100), (1, 5), seed)
        for name, make in POLICIES:
            summary = compute_metrics(simulate(w, make(w)), w)
            totals[name][0] += summary.avg_turnaround
            totals[name][1] += summary.avg_waiting
            totals[name][2] += summary.context_switches

    print(f"{runs} workloads, n={n}, {order} burst order, bursts 1..100")
    print(f"{'policy':10} {'avg TAT':>8} {'avg WT':>8} {'avg CS':>8}")
    for name, (tat, wt, cs) in totals.items():
        print(
            f"{name:10} {format_average(tat / runs):>8}"
            f" {format_average(wt / runs):>8}"
            f" {format_average(Fraction(cs, runs)):>8}"
        )


if __name__ == "__main__":
    main(sys.argv)
