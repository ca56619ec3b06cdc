"""
Kernel vectors and switching
============================

Build a Seidel matrix, find its primitive kernel vector, and watch the
vector change sign on a switched vertex set while the complement keeps it.
"""
from seidelnull import VertexSet, complement, cycle, path, phi, switch
from seidelnull.linalg import rank_exact, seidel_matrix

# the pentagon is the smallest singular example
c5 = cycle(5)
print("S(C5) rows:")
for row in seidel_matrix(c5).rows:
    print("  ", row)
print("rank", rank_exact(seidel_matrix(c5)), "phi", phi(c5).entries)

# a path on five vertices is nonsingular
print("phi(P5):", phi(path(5)))

# switching at {0, 2} flips the sign of those entries (then renormalises)
a = VertexSet.of(5, [0, 2])
print("switched at", a.members(), "->", phi(switch(c5, a)).entries)

# complementing does nothing to the kernel
print("complement:", phi(complement(c5)).entries)
