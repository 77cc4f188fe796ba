import math

import numpy as np
import pytest

from elprop.belief import (
    ALPHA_CAP,
    ConflictError,
    GeneralMassFunction,
    MassFunction,
    bel,
    betp,
    betp_general,
    combine_oracle,
    combine_simple,
    gamma_heuristic,
    general_from_restricted,
    phi,
    pl,
    pl_general,
    restricted_from_general,
    simple_mass,
    vacuous,
)

FRAME = ("A", "B", "C")


def test_mass_function_validates():
    MassFunction(FRAME, (0.2, 0.3, 0.1), 0.4)
    with pytest.raises(ValueError):
        MassFunction(FRAME, (0.2, 0.3), 0.5)  # wrong arity
    with pytest.raises(ValueError):
        MassFunction(FRAME, (0.5, 0.5, 0.5), 0.0)  # sums to 1.5
    with pytest.raises(ValueError):
        MassFunction(FRAME, (-0.1, 0.6, 0.1), 0.4)


def test_simple_and_vacuous():
    m = simple_mass("B", 0.7, FRAME)
    assert m.mass("B") == 0.7
    assert m.mass("A") == 0.0
    assert m.ignorance == pytest.approx(0.3)
    v = vacuous(FRAME)
    assert v.ignorance == 1.0
    with pytest.raises(ValueError):
        simple_mass("Z", 0.5, FRAME)
    with pytest.raises(ValueError):
        simple_mass("A", 1.0, FRAME)


def test_phi_shape():
    assert phi(0.0) == 0.0
    assert phi(-0.2) == 0.0
    # exponent vanishes at delta = 1, leaving alpha0 (capped)
    assert phi(1.0, alpha0=0.9, gamma=3.0) == pytest.approx(0.9)
    assert phi(1.0, alpha0=1.0, gamma=3.0) == ALPHA_CAP
    assert phi(0.5, alpha0=1.0, gamma=2.0) == pytest.approx(math.exp(-2.0))
    # monotone in delta
    xs = np.linspace(0.01, 0.99, 50)
    ys = [phi(x, 0.95, 1.3) for x in xs]
    assert all(a < b for a, b in zip(ys, ys[1:]))


def test_gamma_heuristic():
    # all deltas 1/3: ((1-d)/d)^2 = 4, so gamma = 1/4
    assert gamma_heuristic([1 / 3, 1 / 3, 1 / 3]) == pytest.approx(0.25)
    assert gamma_heuristic([0.5]) == pytest.approx(1.0)
    # zeros and >= 1 are ignored
    assert gamma_heuristic([0.0, 0.5, 1.0, 2.0]) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        gamma_heuristic([0.0, 0.0])
    with pytest.raises(ValueError):
        gamma_heuristic([])


def test_pl_and_betp():
    m = MassFunction(FRAME, (0.5, 0.2, 0.0), 0.3)
    assert pl(m, "A") == pytest.approx(0.8)
    assert pl(m, "C") == pytest.approx(0.3)
    assert betp(m) == pytest.approx((0.6, 0.3, 0.1))
    assert sum(betp(m)) == pytest.approx(1.0)


def test_combine_two_agreeing_halves():
    # two half-confident sources for the same label reinforce to 3/4
    ms = [simple_mass("A", 0.5, FRAME), simple_mass("A", 0.5, FRAME)]
    out = combine_simple(ms)
    assert out.mass("A") == pytest.approx(0.75)
    assert out.ignorance == pytest.approx(0.25)


def test_combine_two_opposed_halves():
    ms = [simple_mass("A", 0.5, FRAME), simple_mass("B", 0.5, FRAME)]
    out = combine_simple(ms)
    assert out.mass("A") == pytest.approx(1 / 3)
    assert out.mass("B") == pytest.approx(1 / 3)
    assert out.ignorance == pytest.approx(1 / 3)


def test_combine_majority():
    ms = [simple_mass("A", 0.5, FRAME), simple_mass("A", 0.5, FRAME),
          simple_mass("B", 0.5, FRAME)]
    out = combine_simple(ms)
    assert out.mass("A") == pytest.approx(0.6)
    assert out.mass("B") == pytest.approx(0.2)
    assert out.ignorance == pytest.approx(0.2)


def test_combine_vacuous_is_identity():
    m = simple_mass("C", 0.8, FRAME)
    out = combine_simple([m, vacuous(FRAME)])
    assert out.mass("C") == pytest.approx(0.8)
    assert out.ignorance == pytest.approx(0.2)
    assert combine_simple([vacuous(FRAME)] * 3).ignorance == 1.0


def test_combine_categorical():
    cat = MassFunction(FRAME, (0.0, 1.0, 0.0), 0.0)
    out = combine_simple([cat, simple_mass("A", 0.9, FRAME)])
    assert out.mass("B") == 1.0
    assert out.ignorance == 0.0
    other = MassFunction(FRAME, (1.0, 0.0, 0.0), 0.0)
    with pytest.raises(ConflictError):
        combine_simple([cat, other])


def test_combine_rejects_mixed_frames_and_empty():
    with pytest.raises(ValueError):
        combine_simple([])
    with pytest.raises(ValueError):
        combine_simple([simple_mass("A", 0.5, FRAME),
                        simple_mass("A", 0.5, ("A", "B"))])


def test_overflow_path_many_strong_sources():
    strong = simple_mass("A", ALPHA_CAP, FRAME)
    out = combine_simple([strong] * 200)  # total weight far beyond exp range
    assert math.isfinite(out.ignorance)
    assert out.mass("A") == pytest.approx(1.0)
    assert out.mass("A") + out.mass("B") + out.mass("C") + out.ignorance == pytest.approx(1.0)
    # two labels, both with astronomical but unequal weight
    out2 = combine_simple([strong] * 120 + [simple_mass("B", ALPHA_CAP, FRAME)] * 119)
    assert math.isfinite(out2.mass("B"))
    assert out2.mass("A") > out2.mass("B") > 0.0
    assert sum(out2.singletons) + out2.ignorance == pytest.approx(1.0)


def test_oracle_roundtrip_forms():
    m = MassFunction(FRAME, (0.5, 0.2, 0.0), 0.3)
    gm = general_from_restricted(m)
    assert gm.masses == {0b001: 0.5, 0b010: 0.2, 0b111: 0.3}
    back = restricted_from_general(gm)
    assert back == m


def test_oracle_bel_pl_betp():
    gm = GeneralMassFunction(FRAME, {0b001: 0.5, 0b010: 0.2, 0b111: 0.3})
    assert bel(gm, ["A"]) == pytest.approx(0.5)
    assert bel(gm, ["A", "B"]) == pytest.approx(0.7)
    assert pl_general(gm, ["A"]) == pytest.approx(0.8)
    assert pl_general(gm, ["C"]) == pytest.approx(0.3)
    assert betp_general(gm) == pytest.approx((0.6, 0.3, 0.1))
    # a genuinely general focal set exercises the oracle beyond the
    # restricted family
    gm2 = GeneralMassFunction(FRAME, {0b011: 0.4, 0b100: 0.1, 0b111: 0.5})
    assert bel(gm2, ["A", "B"]) == pytest.approx(0.4)
    assert pl_general(gm2, ["A"]) == pytest.approx(0.9)
    assert betp_general(gm2) == pytest.approx(
        (0.2 + 0.5 / 3, 0.2 + 0.5 / 3, 0.1 + 0.5 / 3))


def test_oracle_conflict():
    a = GeneralMassFunction(("A", "B"), {0b01: 1.0})
    b = GeneralMassFunction(("A", "B"), {0b10: 1.0})
    with pytest.raises(ConflictError):
        combine_oracle([a, b])


def _random_simple_set(rng, max_frame=6, max_sources=6, alpha_hi=0.99):
    c = rng.integers(2, max_frame + 1)
    frame = tuple(f"c{k}" for k in range(c))
    n = rng.integers(1, max_sources + 1)
    ms = []
    for _ in range(n):
        lab = frame[rng.integers(c)]
        alpha = float(rng.uniform(0.0, alpha_hi))
        ms.append(simple_mass(lab, alpha, frame))
    return frame, ms


def test_closed_form_matches_oracle_fuzz():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        frame, ms = _random_simple_set(rng)
        fast = combine_simple(ms)
        slow = restricted_from_general(
            combine_oracle([general_from_restricted(m) for m in ms]))
        assert fast.ignorance == pytest.approx(slow.ignorance, abs=1e-12)
        for lab in frame:
            assert fast.mass(lab) == pytest.approx(slow.mass(lab), abs=1e-12)


def test_belief_axioms_fuzz():
    # masses sum to 1; pl is singleton mass plus ignorance; pl and bel are
    # complementary in the oracle; pignistic probabilities sum to 1
    rng = np.random.default_rng(11)
    for _ in range(1000):
        frame, ms = _random_simple_set(rng)
        m = combine_simple(ms)
        assert sum(m.singletons) + m.ignorance == pytest.approx(1.0, abs=1e-9)
        gm = general_from_restricted(m)
        full = gm.full_mask()
        for k, lab in enumerate(frame):
            assert pl(m, lab) == pytest.approx(m.mass(lab) + m.ignorance, abs=1e-9)
            mask = 1 << k
            assert pl_general(gm, mask) == pytest.approx(
                1.0 - bel(gm, full & ~mask), abs=1e-9)
        assert sum(betp(m)) == pytest.approx(1.0, abs=1e-9)
