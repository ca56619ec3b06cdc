"""
Two infinite families
=====================

One family has kernel entries growing like 5^(k-1); the other keeps every
entry at least 3^k in absolute value. Both are compared with the closed form.
"""
from seidelnull import FamilySpec, phi

for k in range(1, 5):
    spec = FamilySpec("G", k)
    p = phi(spec.build())
    print(f"G k={k} n={spec.order:2d} max|phi|={p.max_abs:4d} sum={p.entry_sum:5d}",
          "ok" if p.entries == spec.expected_phi() else "MISMATCH")

for k in range(0, 4):
    spec = FamilySpec("H", k)
    p = phi(spec.build())
    print(f"H k={k} n={spec.order:2d} min|phi|={p.min_abs:3d} sum={p.entry_sum:6d}",
          "ok" if p.entries == spec.expected_phi() else "MISMATCH")

print("H_1 kernel:", phi(FamilySpec("H", 1).build()).entries)
