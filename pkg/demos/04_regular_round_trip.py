"""
+-1 kernels and regular graphs
==============================

Switch a random 2k-regular graph on 4k+1 vertices, check the result has a
+-1 kernel, then recover a regular graph from the signs alone.
"""
import random

from seidelnull import VertexSet, complement, is_regular, phi, switch
from seidelnull.analysis import pm_one_from_regular, regular_switch_witness
from seidelnull.families import family_p4_union
from seidelnull.search import random_regular

rng = random.Random(1)
for k in (1, 2, 3):
    h = random_regular(2 * k, 4 * k + 1, seed=k)
    a = VertexSet(h.n, rng.getrandbits(h.n))
    g, p = pm_one_from_regular(h, a)
    w = regular_switch_witness(p)
    print(f"k={k} phi={p.entries}")
    print(f"     switch at {w.members()} -> {is_regular(switch(g, w))}-regular")

# the edge count of a graph with a +-1 kernel sits between 3k and 8k^2-k
for k in (1, 2, 3):
    g = family_p4_union(k)
    print(f"k={k} sparse {g.size()} edges, dense {complement(g).size()} edges,",
          "both +-1:", phi(g).all_pm_one and phi(complement(g)).all_pm_one)
