"""Directed node influence, its normalization and variance, and the
deterministic beta update order derived from them."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, jaccard


@dataclass(frozen=True, eq=False)
class InfluenceTable:
    """Per-pair influence values and per-node order statistics.

    Arrays `sim`, `delta`, `delta_star` hold one vector per node, aligned
    with Graph.neighbors(i). `beta` is 0 for isolated nodes, which never
    carry evidence and sort last.
    """

    eta: float
    rho: np.ndarray            # local density per node
    sim: tuple                 # similarity to each neighbor
    delta: tuple               # influence of each neighbor
    delta_star: tuple          # normalized influence (rows sum to 1)
    variance: np.ndarray       # mean absolute deviation of delta_star
    beta: np.ndarray


def influence(g: Graph, u: int, v: int, eta: float = 1.0) -> float:
    """sim(u, v) * (rho_v / rho_u)^eta, the pull of neighbor v on u.

    Can exceed 1 when v sits in a denser region than u; callers that need
    a bounded strength put it through belief.phi.
    """
    if v not in g.adjacency[u]:
        raise ValueError(f"node {v} is not a neighbor of {u}")
    n = g.node_count
    rho_u = g.degree(u) / (n - 1)
    rho_v = g.degree(v) / (n - 1)
    return jaccard(g, u, v) * (rho_v / rho_u) ** eta


def build_influence_table(g: Graph, eta: float = 1.0,
                          similarity=jaccard) -> InfluenceTable:
    """Evaluate influence for every adjacent ordered pair of `g`.

    `similarity` takes (g, u, v) and defaults to Jaccard over open
    neighborhoods; any symmetric or asymmetric drop-in works.
    """
    n = g.node_count
    degrees = np.asarray(g.degrees(), dtype=float)
    rho = degrees / (n - 1) if n >= 2 else np.zeros(n)
    sim_rows = []
    delta_rows = []
    star_rows = []
    variance = np.zeros(n)
    for i in range(n):
        nbrs = g.neighbors(i)
        if not nbrs:
            empty = np.zeros(0)
            sim_rows.append(empty)
            delta_rows.append(empty)
            star_rows.append(empty)
            continue
        s = np.array([similarity(g, i, j) for j in nbrs])
        ratio = rho[list(nbrs)] / rho[i]
        d = s * ratio ** eta
        total = d.sum()
        if total > 0.0:
            star = d / total
        else:
            # evidence-free neighborhood: uniform by convention, so the
            # variance vanishes and the node sorts by density alone
            star = np.full(len(nbrs), 1.0 / len(nbrs))
        sim_rows.append(s)
        delta_rows.append(d)
        star_rows.append(star)
        variance[i] = np.abs(star - star.mean()).mean()
    beta = np.zeros(n)
    active = degrees > 0
    if active.any():
        total_v = variance[active].sum()
        if total_v > 0.0:
            v_term = variance[active] / total_v
        else:
            v_term = np.full(int(active.sum()), 1.0 / n)
        inv_rho = 1.0 / rho[active]
        beta[active] = v_term + inv_rho / inv_rho.sum()
    return InfluenceTable(
        eta=eta,
        rho=rho,
        sim=tuple(sim_rows),
        delta=tuple(delta_rows),
        delta_star=tuple(star_rows),
        variance=variance,
        beta=beta,
    )


def influence_variance(table: InfluenceTable, i: int) -> float:
    """Mean absolute deviation of node i's normalized influences."""
    return float(table.variance[i])


def beta_order(table: InfluenceTable) -> tuple:
    """All nodes by beta descending; ties (and isolated nodes, beta 0)
    fall back to ascending index."""
    n = len(table.beta)
    return tuple(sorted(range(n), key=lambda i: -table.beta[i]))


def distance(delta: float) -> float:
    """Map influence to the unbounded scale delta / (1 - delta).

    Values at or above 1 are clamped just below it first. Grows with
    similarity; consumers rank by it rather than read it as a metric.
    """
    d = min(delta, 1.0 - 1e-9)
    return d / (1.0 - d)
