"""Benchmark grid: run strategies over generated instances, count accesses.

Complexity verdicts rest on the audited read/write counters, never on wall
time; ``wall_ns`` is recorded for context only, which keeps results
machine-independent.  The log-log exponent fit averages accesses over seeds
per n and then least-squares fits log(accesses) against log(n).
"""

from __future__ import annotations

import csv
import time
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .audited import AuditedArray
from .invert import Strategy, invert
from .perms import PermProfile, generate, oracle_invert

ALGORITHMS = ("oracle", "quadratic", "randomized", "sqrt")

CSV_FIELDS = ("algorithm", "n", "profile", "seed", "reads", "writes", "wall_ns")
CSV_HEADER = ",".join(CSV_FIELDS)


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    profile: str
    seed: int
    reads: int
    writes: int
    wall_ns: int

    @property
    def accesses(self) -> int:
        return self.reads + self.writes


def _oracle_inplace(a: AuditedArray) -> None:
    """Reference inverse driven through the audited API (n reads, n writes).

    Deliberately out-of-place internally; it exists so the oracle can be
    benchmarked on the same counters as the real strategies.
    """
    vals = [a.read(i) for i in range(1, a.n + 1)]
    for i, v in enumerate(oracle_invert(vals), start=1):
        a.write(i, v)


def run_cell(algorithm: str, n: int, profile_text: str, seed: int) -> BenchRecord:
    """Generate one instance, invert it, verify, and report the counters."""
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    profile = PermProfile.parse(profile_text, seed=seed)
    a = generate(n, profile)
    original = a.tolist()
    t0 = time.perf_counter_ns()
    if algorithm == "oracle":
        _oracle_inplace(a)
    else:
        invert(a, Strategy(algorithm, seed=seed))
    wall = time.perf_counter_ns() - t0
    if a.tolist() != oracle_invert(original):
        raise AssertionError(
            f"{algorithm} produced a wrong inverse at n={n}, "
            f"profile={profile.label()}, seed={seed}"
        )
    return BenchRecord(
        algorithm=algorithm,
        n=n,
        profile=profile.label(),
        seed=seed,
        reads=a.reads,
        writes=a.writes,
        wall_ns=wall,
    )


def run_grid(
    algorithms: Sequence[str],
    n_list: Sequence[int],
    profile_text: str,
    seeds: Sequence[int],
) -> list[BenchRecord]:
    """One record per (algorithm, n, seed) cell."""
    return [
        run_cell(algo, n, profile_text, seed)
        for algo in algorithms
        for n in n_list
        for seed in seeds
    ]


# -- CSV ------------------------------------------------------------------------

def write_csv(path: str | Path, records: Iterable[BenchRecord]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        writer.writeheader()
        for rec in records:
            writer.writerow(asdict(rec))


def append_csv(path: str | Path, record: BenchRecord) -> None:
    """Append one row, writing the header first if the file is new/empty."""
    path = Path(path)
    fresh = not path.exists() or path.stat().st_size == 0
    with open(path, "a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        if fresh:
            writer.writeheader()
        writer.writerow(asdict(record))


def read_csv(path: str | Path) -> list[BenchRecord]:
    records = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            records.append(
                BenchRecord(
                    algorithm=row["algorithm"],
                    n=int(row["n"]),
                    profile=row["profile"],
                    seed=int(row["seed"]),
                    reads=int(row["reads"]),
                    writes=int(row["writes"]),
                    wall_ns=int(row["wall_ns"]),
                )
            )
    return records


# -- complexity slope -------------------------------------------------------------

def fit_exponent(ns: Sequence[int], accesses: Sequence[float]) -> float:
    """Least-squares slope of log(accesses) vs log(n)."""
    if len(ns) != len(accesses) or len(ns) < 2:
        raise ValueError("need at least two (n, accesses) points")
    slope, _ = np.polyfit(np.log(np.asarray(ns, dtype=float)),
                          np.log(np.asarray(accesses, dtype=float)), 1)
    return float(slope)


def summarize(records: Sequence[BenchRecord]) -> dict[str, float]:
    """Per-algorithm fitted exponent; accesses averaged over seeds per n."""
    out: dict[str, float] = {}
    for algo in sorted({rec.algorithm for rec in records}):
        per_n: dict[int, list[int]] = {}
        for rec in records:
            if rec.algorithm == algo:
                per_n.setdefault(rec.n, []).append(rec.accesses)
        ns = sorted(per_n)
        means = [float(np.mean(per_n[n])) for n in ns]
        out[algo] = fit_exponent(ns, means)
    return out
