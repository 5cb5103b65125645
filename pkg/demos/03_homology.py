"""Exact reduced homology over a chosen field.

Run with ``python3 demos/03_homology.py``.
"""
from mnfcomplex import GF2, QQ, FieldSpec, is_homology_sphere, new_complex, pentagon, reduced_betti
from mnfcomplex.complex import from_facets

# Six-vertex projective plane: its homology depends on the field.
rp2 = from_facets(6, [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [3, 4, 6], [2, 4, 5], [3, 5, 6], [2, 4, 6],
])
print("RP^2 over GF(2):", reduced_betti(rp2, GF2))
print("RP^2 over Q:    ", reduced_betti(rp2, QQ))
print("RP^2 over GF(3):", reduced_betti(rp2, FieldSpec.parse("gf3")))
print("RP^2 a sphere over GF(2)?", is_homology_sphere(rp2, GF2))
print("RP^2 a sphere over Q?    ", is_homology_sphere(rp2, QQ))

print("pentagon:", reduced_betti(pentagon()), is_homology_sphere(pentagon()))
# Two disjoint edges: not a sphere, it has two components.
print("two edges:", reduced_betti(new_complex(4, [[1, 3], [1, 4], [2, 3], [2, 4]])))
