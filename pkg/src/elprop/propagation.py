"""Evidential label propagation and the plain label-propagation baseline.

Both algorithms run asynchronous sweeps over the nodes; the evidential
variant accumulates log-plausibility weights instead of neighbor counts
and finishes by combining each node's neighborhood evidence into a bba.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .belief import (
    MassFunction,
    combine_simple,
    gamma_heuristic,
    phi,
    simple_mass,
    vacuous,
)
from .graph import Graph
from .influence import beta_order, build_influence_table
from .evaluation import Partition


@dataclass(frozen=True)
class ElpConfig:
    """Knobs of an evidential propagation run.

    gamma may be the string "auto", which fits it to the median influence
    via gamma_heuristic; on graphs where no influence lands strictly
    inside (0, 1) the fit is impossible and 1.0 is used (every evidence
    strength is then 0 or capped anyway, so the value is inert).
    """

    eta: float = 1.0
    alpha0: float = 1.0
    gamma: float | str = "auto"
    max_iter: int = 100
    order: str = "random"
    seed: int = 0
    overlap_eps: float = 0.05

    def __post_init__(self):
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")
        if self.order not in ("random", "beta"):
            raise ValueError(f"unknown order policy {self.order!r}")
        if not 0.0 < self.alpha0 <= 1.0:
            raise ValueError("alpha0 must lie in (0, 1]")
        if self.gamma != "auto" and not self.gamma > 0:
            raise ValueError("gamma must be positive or 'auto'")
        if self.overlap_eps < 0:
            raise ValueError("overlap_eps must be nonnegative")


@dataclass
class LabelState:
    """Mutable working labels during the sweeps."""

    labels: list
    iteration: int = 0
    changed: int = 0


@dataclass(frozen=True)
class NodeClass:
    """normal | overlap | outlier; overlap carries the near-tied label set."""

    kind: str
    labels: tuple = ()


@dataclass(frozen=True, eq=False)
class ElpResult:
    node_ids: tuple          # external node ids, graph order
    frame: tuple             # surviving communities, renamed 1..C
    masses: tuple            # MassFunction per node, over `frame`
    domain: tuple            # hard community id per node
    classes: tuple           # NodeClass per node
    iterations: int
    converged: bool
    order: tuple             # node visit order of the final sweep

    def communities(self) -> dict:
        """Community id -> external ids of the nodes hard-assigned to it."""
        out: dict = {k: [] for k in self.frame}
        for node, lab in zip(self.node_ids, self.domain):
            out[lab].append(node)
        return out

    def to_partition(self) -> Partition:
        return Partition(self.domain)


def evidence_weight(alpha: float) -> float:
    """-log(1 - alpha): additive weight of a simple support mass."""
    if alpha >= 1.0:
        raise ValueError("alpha must be below 1 (clamp upstream)")
    return -math.log1p(-alpha)


def update_node(i: int, state: LabelState, partners, weights, rng) -> int:
    """New label for node i: weight-sum argmax over its partners' labels.

    Partners holding weight 0 still nominate their label, which matters
    exactly when every weight is 0: the node then picks uniformly among
    the distinct neighbor labels. Ties always resolve through `rng`.
    """
    nbrs = partners[i]
    if not nbrs:
        return state.labels[i]
    w = weights[i]
    u: dict = {}
    for idx, j in enumerate(nbrs):
        lab = state.labels[j]
        u[lab] = u.get(lab, 0.0) + w[idx]
    top = max(u.values())
    tied = sorted(lab for lab, val in u.items() if val == top)
    if len(tied) == 1:
        return tied[0]
    return tied[rng.integers(len(tied))]


def _sweep(n, partners, weights, order_policy, sigma, rng, max_iter):
    """Asynchronous update loop shared by the evidential algorithms."""
    state = LabelState(labels=list(range(n)))
    converged = False
    order = tuple(range(n))
    for it in range(1, max_iter + 1):
        if order_policy == "random":
            order = tuple(int(x) for x in rng.permutation(n))
        else:
            order = sigma
        state.changed = 0
        for i in order:
            new = update_node(i, state, partners, weights, rng)
            if new != state.labels[i]:
                state.labels[i] = new
                state.changed += 1
        state.iteration = it
        if state.changed == 0:
            converged = True
            break
    return state, converged, order


def classify(masses, overlap_eps: float = 0.05) -> tuple:
    """Per-node classification from the final bbas.

    Outlier when the ignorance mass strictly dominates every singleton;
    overlap when at least two singletons sit within a relative overlap_eps
    of the top one; otherwise normal.
    """
    out = []
    for m in masses:
        top = m.max_singleton()
        if m.ignorance > top:
            out.append(NodeClass("outlier"))
            continue
        near = tuple(lab for lab, mass in zip(m.frame, m.singletons)
                     if top - mass <= overlap_eps * top)
        if len(near) >= 2:
            out.append(NodeClass("overlap", near))
        else:
            out.append(NodeClass("normal", near))
    return tuple(out)


def _finalize(g, partners, alphas, state, rng, overlap_eps, iterations,
              converged, order):
    """Dense frame, per-node bbas, domain labels and classes."""
    survivors = sorted(set(state.labels))
    dense = {old: k + 1 for k, old in enumerate(survivors)}
    frame = tuple(dense[old] for old in survivors)
    masses = []
    domain = []
    for i in range(g.node_count):
        nbrs = partners[i]
        if nbrs:
            m = combine_simple(
                [simple_mass(dense[state.labels[j]], alphas[i][idx], frame)
                 for idx, j in enumerate(nbrs)])
        else:
            m = vacuous(frame)
        masses.append(m)
        if not nbrs:
            # no evidence at all: a frame-wide plausibility tie, resolved
            # by keeping the node's own singleton community
            domain.append(dense[state.labels[i]])
            continue
        best = m.argmax_labels()
        if len(best) == 1:
            domain.append(best[0])
        else:
            domain.append(best[rng.integers(len(best))])
    return ElpResult(
        node_ids=g.labels,
        frame=frame,
        masses=tuple(masses),
        domain=tuple(domain),
        classes=classify(masses, overlap_eps),
        iterations=iterations,
        converged=converged,
        order=order,
    )


def _resolve_gamma(cfg_gamma, deltas):
    if cfg_gamma != "auto":
        return float(cfg_gamma)
    try:
        return gamma_heuristic(deltas)
    except ValueError:
        return 1.0


def elp_run(g: Graph, cfg: ElpConfig = ElpConfig()) -> ElpResult:
    """Full evidential label propagation on `g`.

    Every node starts in its own community; sweeps follow either a fresh
    seeded shuffle per iteration or the fixed beta order; the run stops on
    the first change-free sweep or after cfg.max_iter. Neighbor evidence
    strengths come from phi over the influence table.
    """
    rng = np.random.default_rng(cfg.seed)
    table = build_influence_table(g, cfg.eta)
    all_deltas = np.concatenate(table.delta) if g.node_count else np.zeros(0)
    gamma = _resolve_gamma(cfg.gamma, all_deltas)
    partners = tuple(g.neighbors(i) for i in range(g.node_count))
    alphas = tuple(
        np.array([phi(d, cfg.alpha0, gamma) for d in table.delta[i]])
        for i in range(g.node_count))
    weights = tuple(-np.log1p(-a) for a in alphas)
    sigma = beta_order(table) if cfg.order == "beta" else None
    state, converged, order = _sweep(
        g.node_count, partners, weights, cfg.order, sigma, rng, cfg.max_iter)
    return _finalize(g, partners, alphas, state, rng, cfg.overlap_eps,
                     state.iteration, converged, order)


def lpa_run(g: Graph, seed: int = 0, max_iter: int = 100, details: bool = False):
    """Classic asynchronous label propagation.

    Node order reshuffles every sweep; each node adopts a plurality label
    of its neighbors, keeping its own when that is already among the
    maximal ones, with uniform seeded tie-breaks otherwise. Stops once
    every node's label sits in its neighborhood's maximal set.

    Returns the Partition, or (Partition, sweeps, stable) with details.
    """
    rng = np.random.default_rng(seed)
    n = g.node_count
    labels = list(range(n))

    def maximal(i):
        counts: dict = {}
        for j in g.neighbors(i):
            counts[labels[j]] = counts.get(labels[j], 0) + 1
        top = max(counts.values())
        return sorted(lab for lab, c in counts.items() if c == top)

    stable = False
    sweeps = 0
    for sweeps in range(1, max_iter + 1):
        for i in rng.permutation(n):
            if not g.degree(i):
                continue
            best = maximal(i)
            if labels[i] in best:
                continue
            labels[i] = best[0] if len(best) == 1 else best[rng.integers(len(best))]
        if all(not g.degree(i) or labels[i] in maximal(i) for i in range(n)):
            stable = True
            break
    part = Partition(tuple(labels))
    if details:
        return part, sweeps, stable
    return part
