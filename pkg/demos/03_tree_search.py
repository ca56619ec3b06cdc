"""
Searching trees for singular Seidel matrices
============================================

Enumerate free trees one order at a time and push them through the
filter pipeline: congruence prefilter, modular rank, then exact kernel.
"""
import time

from seidelnull import StageConfig, enumerate_trees, scan
from seidelnull.analysis import tree_residues
from seidelnull.graph6 import parse_graph6

for n in (5, 9, 13):
    rep = scan(enumerate_trees(n), StageConfig(workers=1))
    print(f"n={n:2d} trees={rep.total:5d} singular={len(rep.singular)}")

start = time.perf_counter()
rep = scan(enumerate_trees(17), StageConfig())
print(f"n=17 trees={rep.total} singular={len(rep.singular)} +-1={len(rep.pm_one)} "
      f"({time.perf_counter() - start:.1f} s)")
print(f"  rejected by prefilter {rep.prefilter_rejected}, by mod p {rep.modp_rejected}, "
      f"solved exactly {rep.exact_checked}")

for g6, vec in rep.singular:
    tag = "+-1" if all(abs(x) == 1 for x in vec) else ""
    print(" ", g6, "residues", tree_residues(parse_graph6(g6)), tag)
