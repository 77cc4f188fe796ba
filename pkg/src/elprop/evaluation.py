"""Partition quality (normalized mutual information) and repeated-run
benchmark statistics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Partition:
    """Hard community assignment: one id per node, aligned with the
    graph's node indices."""

    labels: tuple

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a partition needs at least one node")

    @property
    def community_count(self) -> int:
        return len(set(self.labels))

    def confusion(self, other: "Partition") -> np.ndarray:
        """Contingency table N_ij of co-assignment counts with `other`.

        Rows follow this partition's communities, columns the other's,
        both in sorted-id order.
        """
        if len(self.labels) != len(other.labels):
            raise ValueError("partitions cover different node sets")
        rows = {lab: i for i, lab in enumerate(sorted(set(self.labels)))}
        cols = {lab: j for j, lab in enumerate(sorted(set(other.labels)))}
        table = np.zeros((len(rows), len(cols)))
        for a, b in zip(self.labels, other.labels):
            table[rows[a], cols[b]] += 1.0
        return table


def truth_partition(g, mapping) -> Partition:
    """Align a {node id: community} mapping with g's node order."""
    missing = [lab for lab in g.labels if lab not in mapping]
    if missing:
        raise ValueError(f"ground truth missing for nodes: {missing[:5]}"
                         + ("..." if len(missing) > 5 else ""))
    return Partition(tuple(mapping[lab] for lab in g.labels))


def nmi(a: Partition, b: Partition) -> float:
    """Normalized mutual information between two hard partitions.

    The ratio -2 sum N_ij log(N_ij n / (N_i N_j)) over
    sum N_i log(N_i/n) + sum N_j log(N_j/n), with 0 log 0 dropped. Two
    single-community partitions are identical, hence 1; a trivial against
    a non-trivial partition comes out 0 from the formula itself.
    """
    if len(a.labels) != len(b.labels):
        raise ValueError("partitions cover different node sets")
    table = a.confusion(b)
    n = float(len(a.labels))
    ni = table.sum(axis=1)
    nj = table.sum(axis=0)
    if len(ni) == 1 and len(nj) == 1:
        return 1.0
    num = 0.0
    for i in range(len(ni)):
        for j in range(len(nj)):
            nij = table[i, j]
            if nij > 0.0:
                num -= 2.0 * nij * np.log(nij * n / (ni[i] * nj[j]))
    den = float((ni * np.log(ni / n)).sum() + (nj * np.log(nj / n)).sum())
    return num / den + 0.0


@dataclass(frozen=True)
class RunStats:
    """Aggregate of one algorithm's NMI scores across seeded runs.

    `details` keeps one (seed, nmi, communities, iterations) record per
    run; iterations is None for algorithms that do not report it.
    """

    values: tuple
    seeds: tuple
    max: float
    min: float
    mean: float
    deviation: float
    sample: bool
    details: tuple = ()

    @classmethod
    def from_values(cls, values, seeds, sample=False, details=()):
        vals = np.asarray(values, dtype=float)
        if vals.size == 0:
            raise ValueError("no runs to aggregate")
        if sample and vals.size > 1:
            dev = float(vals.std(ddof=1))
        elif sample:
            dev = 0.0
        else:
            dev = float(vals.std())
        return cls(values=tuple(float(v) for v in vals),
                   seeds=tuple(int(s) for s in seeds),
                   max=float(vals.max()), min=float(vals.min()),
                   mean=float(vals.mean()), deviation=dev,
                   sample=sample, details=tuple(details))


def benchmark(g, algorithm, cfg, runs: int, truth: Partition,
              seed0: int = 0, sample: bool = False) -> RunStats:
    """Repeat `algorithm` over seeds seed0..seed0+runs-1 and score NMI.

    `algorithm(g, cfg, seed)` must return either a Partition or an object
    with to_partition(); hard domain labels enter the NMI regardless of
    outlier or overlap status. Deviation is population by default, sample
    on request.
    """
    if runs < 1:
        raise ValueError("runs must be at least 1")
    values = []
    seeds = []
    details = []
    for seed in range(seed0, seed0 + runs):
        result = algorithm(g, cfg, seed)
        part = result.to_partition() if hasattr(result, "to_partition") else result
        score = nmi(part, truth)
        values.append(score)
        seeds.append(seed)
        details.append((seed, score, part.community_count,
                        getattr(result, "iterations", None)))
    return RunStats.from_values(values, seeds, sample=sample, details=details)
