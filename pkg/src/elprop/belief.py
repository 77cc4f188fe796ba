"""Belief-function arithmetic over a frame of candidate communities.

Working bbas are restricted to singleton focal sets plus the whole frame
(the ignorance set). A general power-set representation is kept alongside
as a slow reference for the fast closed-form combination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Highest admissible singleton mass: keeps -log(1 - alpha) finite so
# categorical evidence stays "very strong" instead of infinite.
ALPHA_CAP = 1.0 - 1e-9

MASS_TOL = 1e-9


class ConflictError(ValueError):
    """Combination of fully conflicting evidence (Dempster normalizer 0)."""


@dataclass(frozen=True)
class MassFunction:
    """bba with focal sets restricted to singletons and the frame itself.

    `frame` is an ordered tuple of community ids; `singletons[k]` is the
    mass on {frame[k]}; `ignorance` is the mass on the whole frame.
    """

    frame: tuple
    singletons: tuple
    ignorance: float

    def __post_init__(self):
        if len(self.frame) != len(self.singletons):
            raise ValueError("one singleton mass per frame element required")
        total = sum(self.singletons) + self.ignorance
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(f"masses sum to {total!r}, not 1")
        if self.ignorance < 0 or any(m < 0 for m in self.singletons):
            raise ValueError("negative mass")

    def mass(self, label) -> float:
        return self.singletons[self.frame.index(label)]

    def max_singleton(self) -> float:
        return max(self.singletons) if self.singletons else 0.0

    def argmax_labels(self) -> tuple:
        """Labels whose singleton mass attains the maximum (exact ties)."""
        top = self.max_singleton()
        return tuple(lab for lab, m in zip(self.frame, self.singletons) if m == top)


def vacuous(frame) -> MassFunction:
    return MassFunction(tuple(frame), (0.0,) * len(frame), 1.0)


def simple_mass(label, alpha: float, frame) -> MassFunction:
    """Simple support bba: mass alpha on {label}, the rest on the frame."""
    frame = tuple(frame)
    if label not in frame:
        raise ValueError(f"label {label!r} not in frame")
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")
    singles = [0.0] * len(frame)
    singles[frame.index(label)] = alpha
    return MassFunction(frame, tuple(singles), 1.0 - alpha)


def phi(delta: float, alpha0: float = 1.0, gamma: float = 1.0) -> float:
    """Evidence strength of an influence value.

    alpha0 * exp(-gamma * (1 - delta) / delta), continued with phi(0) = 0,
    and capped at ALPHA_CAP (influence values above 1 would otherwise push
    the result past alpha0).
    """
    if delta <= 0.0:
        return 0.0
    value = alpha0 * math.exp(-gamma * (1.0 - delta) / delta)
    return min(value, ALPHA_CAP)


def gamma_heuristic(deltas) -> float:
    """Scale coefficient for phi: reciprocal median of ((1-d)/d)^2.

    Only deltas strictly inside (0, 1) enter the median; zeros give an
    infinite term and values >= 1 a non-positive exponent, both outside
    what the mapping presumes.
    """
    pool = [((1.0 - d) / d) ** 2 for d in deltas if 0.0 < d < 1.0]
    if not pool:
        raise ValueError(
            "no influence values strictly inside (0, 1); set gamma explicitly")
    return 1.0 / float(np.median(pool))


def pl(m: MassFunction, label) -> float:
    """Plausibility of a singleton: its mass plus the ignorance mass."""
    return m.mass(label) + m.ignorance


def betp(m: MassFunction) -> tuple:
    """Pignistic probabilities: ignorance split evenly over the frame."""
    c = len(m.frame)
    share = m.ignorance / c
    return tuple(s + share for s in m.singletons)


def combine_simple(ms) -> MassFunction:
    """Dempster-combine simple support bbas in closed form.

    Each input may carry at most one nonzero singleton. With u_k the sum
    of -log(1 - alpha_j) over sources voting for label k, the unnormalized
    combined masses are expm1(u_k) for {k} and 1 for the frame; the
    normalizer is their sum. This equals the general power-set rule
    (combine_oracle) on these inputs.

    Raises ConflictError when categorical sources (alpha exactly 1)
    disagree; any other input mix leaves positive mass on the frame.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("nothing to combine")
    frame = ms[0].frame
    weight: dict = {}
    categorical: set = set()
    for m in ms:
        if m.frame != frame:
            raise ValueError("all bbas must share one frame")
        nonzero = [(lab, mass) for lab, mass in zip(m.frame, m.singletons) if mass > 0.0]
        if len(nonzero) > 1:
            raise ValueError("combine_simple needs at most one singleton per bba")
        if not nonzero:
            continue
        lab, alpha = nonzero[0]
        if alpha >= 1.0:
            categorical.add(lab)
        else:
            weight[lab] = weight.get(lab, 0.0) - math.log1p(-alpha)
    if categorical:
        if len(categorical) > 1:
            raise ConflictError("fully conflicting evidence: "
                                "categorical sources with different labels")
        lab = next(iter(categorical))
        singles = [0.0] * len(frame)
        singles[frame.index(lab)] = 1.0
        return MassFunction(frame, tuple(singles), 0.0)
    if not weight:
        return vacuous(frame)
    labs = sorted(weight, key=frame.index)
    u = np.array([weight[lab] for lab in labs])
    peak = float(u.max())
    if peak < 700.0:
        unnorm = np.expm1(u)
        den = 1.0 + unnorm.sum()
        singleton_masses = unnorm / den
        ignorance = 1.0 / den
    else:
        # exp(u) would overflow; divide numerator and denominator by exp(peak)
        scaled = np.exp(u - peak) - math.exp(-peak)
        den = scaled.sum() + math.exp(-peak)
        singleton_masses = scaled / den
        ignorance = math.exp(-peak) / den
    singles = [0.0] * len(frame)
    for lab, mass in zip(labs, singleton_masses):
        singles[frame.index(lab)] = float(mass)
    return MassFunction(frame, tuple(singles), float(ignorance))


# ---------------------------------------------------------------------------
# General power-set form: the brute-force reference.

@dataclass(frozen=True)
class GeneralMassFunction:
    """bba over the full power set, focal sets encoded as bitmasks."""

    frame: tuple
    masses: dict  # bitmask -> mass

    def __post_init__(self):
        if len(self.frame) > 12:
            raise ValueError("power-set form is capped at 12 frame elements")
        total = sum(self.masses.values())
        if abs(total - 1.0) > MASS_TOL:
            raise ValueError(f"masses sum to {total!r}, not 1")
        if any(m < -MASS_TOL for m in self.masses.values()):
            raise ValueError("negative mass")
        if self.masses.get(0, 0.0) > MASS_TOL:
            raise ValueError("mass on the empty set")

    def full_mask(self) -> int:
        return (1 << len(self.frame)) - 1

    def mask_of(self, subset) -> int:
        mask = 0
        for lab in subset:
            mask |= 1 << self.frame.index(lab)
        return mask


def general_from_restricted(m: MassFunction) -> GeneralMassFunction:
    masses = {1 << k: s for k, s in enumerate(m.singletons) if s > 0.0}
    if m.ignorance > 0.0:
        full = (1 << len(m.frame)) - 1
        masses[full] = masses.get(full, 0.0) + m.ignorance
    return GeneralMassFunction(m.frame, masses)


def restricted_from_general(gm: GeneralMassFunction) -> MassFunction:
    full = gm.full_mask()
    singles = [0.0] * len(gm.frame)
    ignorance = 0.0
    for mask, mass in gm.masses.items():
        if mask == full:
            ignorance += mass
        elif mask.bit_count() == 1:
            singles[mask.bit_length() - 1] += mass
        elif mass > 0.0:
            raise ValueError("focal set is neither a singleton nor the frame")
    return MassFunction(gm.frame, tuple(singles), ignorance)


def combine_oracle(ms) -> GeneralMassFunction:
    """Dempster's rule by explicit focal-set enumeration.

    Folds the inputs pairwise: intersect every focal pair, pool the mass
    landing on the empty set as conflict, renormalize. Independent of the
    closed form in combine_simple on purpose.
    """
    ms = list(ms)
    if not ms:
        raise ValueError("nothing to combine")
    frame = ms[0].frame
    acc = dict(ms[0].masses)
    for m in ms[1:]:
        if m.frame != frame:
            raise ValueError("all bbas must share one frame")
        out: dict = {}
        for a, ma in acc.items():
            for b, mb in m.masses.items():
                out[a & b] = out.get(a & b, 0.0) + ma * mb
        conflict = out.pop(0, 0.0)
        norm = 1.0 - conflict
        if norm <= 0.0:
            raise ConflictError("fully conflicting evidence")
        acc = {mask: mass / norm for mask, mass in out.items() if mass > 0.0}
    return GeneralMassFunction(frame, acc)


def bel(gm: GeneralMassFunction, subset) -> float:
    """Total mass committed to nonempty subsets of `subset`."""
    a = gm.mask_of(subset) if not isinstance(subset, int) else subset
    return sum(mass for mask, mass in gm.masses.items()
               if mask and mask & ~a == 0)


def pl_general(gm: GeneralMassFunction, subset) -> float:
    """Total mass of focal sets meeting `subset`."""
    a = gm.mask_of(subset) if not isinstance(subset, int) else subset
    return sum(mass for mask, mass in gm.masses.items() if mask & a)


def betp_general(gm: GeneralMassFunction) -> tuple:
    out = [0.0] * len(gm.frame)
    for mask, mass in gm.masses.items():
        size = mask.bit_count()
        for k in range(len(gm.frame)):
            if mask >> k & 1:
                out[k] += mass / size
    return tuple(out)
