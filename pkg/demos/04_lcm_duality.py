"""The lcm lattice of the non-faces, its homology, and the duality of spheres.

Run with ``python3 demos/04_lcm_duality.py``.
"""
from mnfcomplex import betti_table, build_lattice, check_duality, cross_minus_facet, h, pentagon

c = pentagon()
lat = build_lattice(c)
print("lattice elements:", len(lat))

# h(i, S) is the reduced homology of the open interval below S.
print("h(-1, {1,3})     =", h(c, -1, [1, 3]))       # an atom
print("h(0, {1,3,4})    =", h(c, 0, [1, 3, 4]))     # two atoms, two points
print("h(1, {1..5})     =", h(c, 1, [1, 2, 3, 4, 5]))

table = betti_table(c)
print("graded Betti totals:", table.total())

# On a homology sphere h(i-2, S) matches h(codim-i-2, complement of S).
print("violations on the pentagon:", check_duality(c))

# Removing one facet from a cross-polytope breaks the sphere, and the duality.
bad = check_duality(cross_minus_facet(3))
print(len(bad), "violations, e.g.", bad[0])
