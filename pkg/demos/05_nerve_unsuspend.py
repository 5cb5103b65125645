"""The nerve of the non-faces, and stripping suspensions.

Run with ``python3 demos/05_nerve_unsuspend.py``.
"""
from mnfcomplex import (
    are_isomorphic,
    cross_polytope,
    detect_pd_pattern,
    nerve,
    nerve_matching_number,
    nerve_max_degree,
    one_point_suspension,
    pd_sphere,
    pentagon,
    replay,
    transpose_reconstruct,
    two_point_suspension,
    unsuspend,
)
from mnfcomplex.io import format_log
from mnfcomplex.nerve import nerve_dot

p = pentagon()
nv = nerve(p)
print("pentagon nerve facets:", [sorted(f) for f in nv.facets])
print("max degree", nerve_max_degree(p), "matching", nerve_matching_number(p))

# The complex can be recovered from its nerve, up to the names of its vertices.
back = transpose_reconstruct(nv)
print("reconstructed:", back, "| isomorphic:", are_isomorphic(back, p))

print("P_3 pendant simplex dim:", detect_pd_pattern(nerve(pd_sphere(3))))

# Suspend twice, then undo it; the log replays to the exact input.
s = one_point_suspension(two_point_suspension(p), 2)
core = unsuspend(s)
print("suspended:", s)
print("core:     ", core.complex)
print(format_log(core.log), end="")
print("replay exact:", replay(core.complex, core.labels, core.log) == s)

# The octahedron is fully suspended: nothing is left.
print("octahedron core:", unsuspend(cross_polytope(3)).complex)

print(nerve_dot(p))
