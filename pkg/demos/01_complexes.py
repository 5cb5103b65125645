"""A complex is its list of minimal non-faces.

Run with ``python3 demos/01_complexes.py``.
"""
from mnfcomplex import alpha, dimension, f_vector, facets, is_face, is_pure, new_complex, pentagon

# The boundary of a pentagon: vertices 1..5, the five diagonals are missing.
c = pentagon()
print(c)
print("non-faces:", [sorted(s) for s in c.mnf])
print("facets:   ", [sorted(f) for f in facets(c)])
print("dim", dimension(c), "| pure", is_pure(c), "| f-vector", f_vector(c))

# alpha = m - (n - d) compares the number of non-faces with the codimension.
print("alpha(pentagon) =", alpha(c))

# Faces are tested directly against the non-faces, no face list needed.
print("{1,2} a face?", is_face(c, [1, 2]), "  {1,3} a face?", is_face(c, [1, 3]))

# Any family of sets works; non-minimal entries are rejected.
square = new_complex(4, [[1, 3], [2, 4]])
print("square:", square, "alpha", alpha(square))
try:
    new_complex(4, [[1, 3], [1, 2, 3]])
except ValueError as err:
    print("rejected:", err)
