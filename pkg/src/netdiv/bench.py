"""Benchmark harness: seeded instances, per-phase timing, quartiles.

Each repetition generates a fresh instance (seed + repetition index),
times only the solve call on a monotonic clock, and records one CSV row
per phase (total, dual, oddpath).  Summaries report the 25/50/75 percent
quartiles of the total phase alongside the n*log2(n)/100 ms curve that
near-linearithmic scaling should parallel (the constant is
hardware-specific; the curve is a guide, not a bound).
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .diversion import DiversionInstance, solve
from .generate import GeneratorConfig, generate

__all__ = ["BenchRecord", "SizeSummary", "run_bench", "reference_millis",
           "write_records_csv", "CSV_FIELDS"]

CSV_FIELDS = ("family", "n", "m", "seed", "repetition", "tracker",
              "phase", "millis")


@dataclass(frozen=True)
class BenchRecord:
    family: str
    n: int
    m: int
    seed: int
    repetition: int
    tracker: str
    phase: str
    millis: float


@dataclass(frozen=True)
class SizeSummary:
    family: str
    size: int
    n: int
    m: int
    reps: int
    t25: float
    t50: float
    t75: float
    reference: float


def reference_millis(n: int) -> float:
    """The n * log2(n) / 100 ms guide value."""
    return n * math.log2(n) / 100.0 if n > 1 else 0.0


def run_bench(family: str, sizes, reps: int, seed: int,
              tracker: str = "unionfind",
              weight_lo: float = 0.0, weight_hi: float = 1000.0,
              inverse_length: bool = False,
              terminal_policy: str = "uniform",
              warmup: bool = True,
              progress=None) -> tuple[list, list]:
    """Run the grid/delaunay benchmark; returns (records, summaries).

    Timing covers the solve only; generation is excluded.  ``progress``
    is an optional callable fed one line per repetition.
    """
    records: list[BenchRecord] = []
    summaries: list[SizeSummary] = []
    if warmup:
        # absorb one-off JIT compilation outside the timed region
        small = generate(GeneratorConfig(family, 2 if family == "grid"
                                         else 4, seed=0))
        solve(DiversionInstance(small.pg, small.s, small.t, small.b),
              tracker=tracker)
    for size in sizes:
        totals = []
        n = m = 0
        for rep in range(reps):
            cfg = GeneratorConfig(family, size, seed=seed + rep,
                                  weight_lo=weight_lo, weight_hi=weight_hi,
                                  inverse_length=inverse_length,
                                  terminal_policy=terminal_policy)
            inst = generate(cfg)
            n, m = inst.pg.n, inst.pg.m
            timings: dict = {}
            solve(DiversionInstance(inst.pg, inst.s, inst.t, inst.b),
                  tracker=tracker, timings=timings)
            for phase in ("total", "dual", "oddpath"):
                records.append(BenchRecord(family, n, m, seed + rep, rep,
                                           tracker, phase,
                                           timings[phase]))
            totals.append(timings["total"])
            if progress is not None:
                progress(f"{family} size={size} rep={rep} "
                         f"total={timings['total']:.2f}ms")
        q25, q50, q75 = np.percentile(totals, [25, 50, 75])
        summaries.append(SizeSummary(family, size, n, m, reps,
                                     float(q25), float(q50), float(q75),
                                     reference_millis(n)))
    return records, summaries


def write_records_csv(path, records) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
        for r in records:
            writer.writerow([r.family, r.n, r.m, r.seed, r.repetition,
                             r.tracker, r.phase, f"{r.millis:.6f}"])


def format_summary_table(summaries) -> str:
    head = (f"{'family':>9} {'size':>7} {'n':>9} {'m':>9} "
            f"{'t25 ms':>11} {'t50 ms':>11} {'t75 ms':>11} "
            f"{'nlog2n/100 ms':>14}")
    rows = [head]
    for s in summaries:
        rows.append(f"{s.family:>9} {s.size:>7} {s.n:>9} {s.m:>9} "
                    f"{s.t25:>11.2f} {s.t50:>11.2f} {s.t75:>11.2f} "
                    f"{s.reference:>14.2f}")
    return "\n".join(rows)
