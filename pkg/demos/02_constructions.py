"""Families of spheres and the operations that build new complexes from old.

Run with ``python3 demos/02_constructions.py``.
"""
from mnfcomplex import (
    alpha,
    are_isomorphic,
    codim3_sphere,
    cross_polytope,
    cyclic_boundary,
    join,
    link,
    one_point_suspension,
    pd_sphere,
    pentagon,
    simplex_boundary,
    two_point_suspension,
)

for name, c in [
    ("simplex boundary k=3", simplex_boundary(3)),
    ("cross-polytope d=3", cross_polytope(3)),
    ("cyclic C4(7)", cyclic_boundary(4, 7)),
    ("P_3 family", pd_sphere(3)),
]:
    print(f"{name:22s} n={c.n} d={c.d} m={c.m} alpha={alpha(c)}")

# Codimension-three spheres with m = 7 non-faces are the cyclic 4-polytope.
print("codim3(7) ~ C4(7):", are_isomorphic(codim3_sphere(7), cyclic_boundary(4, 7)))

# Suspensions add vertices but keep alpha.
p = pentagon()
for c in (one_point_suspension(p, 1), two_point_suspension(p), join(p, simplex_boundary(1))):
    print(f"n={c.n} m={c.m} alpha={alpha(c)}")

# A link comes back relabeled, with a map to the original vertex names.
lk = link(cyclic_boundary(4, 7), [1])
print("link of vertex 1 in C4(7):", lk.complex)
print("its vertices were called", lk.labels)
