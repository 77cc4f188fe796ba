import numpy as np
import pytest

from elprop.graph import from_edges, jaccard
from elprop.influence import (
    beta_order,
    build_influence_table,
    distance,
    influence,
    influence_variance,
)


def _ring(n):
    return from_edges([(i, (i + 1) % n) for i in range(n)])


def test_influence_reduces_to_similarity():
    g = from_edges([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])
    a, b, c, d = (g.index_of(x) for x in "abcd")
    # eta 0 kills the density ratio
    assert influence(g, c, d, eta=0.0) == pytest.approx(jaccard(g, c, d))
    # equal degrees: ratio is 1 for any eta
    assert influence(g, a, b, eta=3.7) == pytest.approx(jaccard(g, a, b))
    with pytest.raises(ValueError):
        influence(g, a, d)  # not adjacent


def test_influence_density_ratio_arithmetic():
    # path a-b-c: rho_b = 1, rho_a = 1/2; with a flat similarity of 0.5
    # the influence of b on a is 0.5 * 2 = 1, above the unit range
    g = from_edges([("a", "b"), ("b", "c")])
    t = build_influence_table(g, eta=1.0, similarity=lambda g_, u, v: 0.5)
    a, b = g.index_of("a"), g.index_of("b")
    row = dict(zip(g.neighbors(a), t.delta[a]))
    assert row[b] == pytest.approx(1.0)
    back = dict(zip(g.neighbors(b), t.delta[b]))
    assert back[a] == pytest.approx(0.25)


def test_variance_hand_case():
    # u's neighbors split influence 0.75 / 0.25, so the mean absolute
    # deviation is 0.25: x has three neighbors to y's one
    g = from_edges([("u", "x"), ("u", "y"), ("x", "a"), ("x", "b")])
    t = build_influence_table(g, eta=1.0, similarity=lambda g_, i, j: 1.0)
    u = g.index_of("u")
    assert sorted(t.delta_star[u]) == pytest.approx([0.25, 0.75])
    assert influence_variance(t, u) == pytest.approx(0.25)


def test_variance_zero_when_uniform():
    tri = from_edges([(0, 1), (1, 2), (2, 0)])
    t = build_influence_table(tri)
    for i in range(3):
        assert t.delta_star[i] == pytest.approx([0.5, 0.5])
        assert influence_variance(t, i) == 0.0


def test_zero_similarity_fallback_is_uniform():
    # star: no two adjacent nodes share a neighbor, every similarity is 0
    star = from_edges([("c", f"l{k}") for k in range(4)])
    t = build_influence_table(star)
    c = star.index_of("c")
    assert all(s == 0.0 for s in t.sim[c])
    assert t.delta_star[c] == pytest.approx([0.25] * 4)
    assert t.variance.sum() == 0.0


def test_beta_order_star_leaves_first():
    star = from_edges([("c", f"l{k}") for k in range(4)])
    order = beta_order(build_influence_table(star))
    c = star.index_of("c")
    assert order[-1] == c
    assert list(order[:4]) == sorted(star.index_of(f"l{k}") for k in range(4))


def test_beta_order_regular_graph_is_index_order():
    for g in (_ring(6), from_edges([(0, 1), (1, 2), (2, 0)])):
        t = build_influence_table(g)
        assert beta_order(t) == tuple(range(g.node_count))


def test_beta_order_isolated_last():
    g = from_edges([("a", "b"), ("b", "c"), ("c", "a")], isolated=["z", "y"])
    t = build_influence_table(g)
    order = beta_order(t)
    z, y = g.index_of("z"), g.index_of("y")
    assert order[-2:] == (z, y)  # index order among the isolated
    assert t.beta[z] == 0.0 and t.rho[z] == 0.0


def test_distance_transform():
    assert distance(0.0) == 0.0
    assert distance(0.5) == pytest.approx(1.0)
    assert distance(0.9) == pytest.approx(9.0)
    clamped = distance(1.0)
    assert clamped == pytest.approx((1.0 - 1e-9) / 1e-9)
    assert distance(3.0) == clamped


def _random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(edges, isolated=range(n))


def test_table_invariants_fuzz():
    rng = np.random.default_rng(23)
    for trial in range(60):
        g = _random_graph(rng, int(rng.integers(2, 25)), rng.uniform(0.05, 0.6))
        eta = float(rng.uniform(0.0, 3.0))
        t = build_influence_table(g, eta=eta)
        for i in range(g.node_count):
            assert np.all(t.delta[i] >= 0.0)
            if g.degree(i):
                assert t.delta_star[i].sum() == pytest.approx(1.0)
                spread = t.delta_star[i].max() - t.delta_star[i].min()
                assert (t.variance[i] == 0.0) == (spread == 0.0)
        order = beta_order(t)
        assert sorted(order) == list(range(g.node_count))
        assert order == beta_order(build_influence_table(g, eta=eta))
