"""
Node influence and the deterministic update order
=================================================

Label propagation is order-sensitive, so the order is worth inspecting.
Influence weighs a neighbor's similarity by the ratio of local densities:
a denser neighbor pulls harder. Nodes whose incoming influences are
uneven, or whose density is low, are scheduled early; their labels are
the least settled.
"""

import numpy as np

from elprop.datasets import load_dataset
from elprop.graph import from_edges, jaccard
from elprop.influence import beta_order, build_influence_table, influence

# a 4-cycle with one chord: densities differ, so influence is asymmetric
g = from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("a", "c")])
t = build_influence_table(g)
a, c, d = g.index_of("a"), g.index_of("c"), g.index_of("d")
print("jaccard(a, d) =", round(jaccard(g, a, d), 4))
print("influence of a on d:", round(influence(g, d, a), 4),
      " of d on a:", round(influence(g, a, d), 4))

# per-node normalized influences always sum to one
for i, name in enumerate(g.labels):
    print(f"  {name}: delta* = {np.round(t.delta_star[i], 4)}"
          f"  variance = {t.variance[i]:.4f}  beta = {t.beta[i]:.4f}")
print("update order:", [g.label_of(i) for i in beta_order(t)])

# The star is the degenerate extreme: no two adjacent nodes share a
# neighbor, all similarities vanish, and the order falls back to density
# alone, so the leaves go first and the hub last.
star = from_edges([("hub", f"leaf{k}") for k in range(4)])
ts = build_influence_table(star)
print("\nstar order:", [star.label_of(i) for i in beta_order(ts)])

# On the karate club the order surfaces the peripheral members first.
karate, _ = load_dataset("karate")
tk = build_influence_table(karate)
sigma = beta_order(tk)
print("\nkarate: first five in order",
      [karate.label_of(i) for i in sigma[:5]],
      " last five", [karate.label_of(i) for i in sigma[-5:]])
hub = max(range(karate.node_count), key=karate.degree)
print("highest-degree node", karate.label_of(hub),
      "sits at position", sigma.index(hub) + 1, "of", karate.node_count)
