import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mnfcomplex import (
    GF2,
    QQ,
    FieldSpec,
    betti_table,
    build_lattice,
    check_duality,
    cross_minus_facet,
    cross_polytope,
    cyclic_boundary,
    h,
    interval_order_complex,
    is_homology_sphere,
    new_complex,
    pd_sphere,
    pentagon,
    simplex_boundary,
)
from mnfcomplex.complex import MnfComplex, to_mask, to_set
from mnfcomplex.errors import NotInLattice, TooLarge
from mnfcomplex.lcm import complements_in_lattice, interval_betti

from oracles import brute_lattice, chain_homology, hochster_table
from strategies import complexes


def test_pentagon_lattice_size_matches_brute_force():
    c = pentagon()
    lat = build_lattice(c)
    assert {to_set(s) for s in lat.elements} == brute_lattice(c.mnf)
    # frozen from the brute-force union enumeration
    assert len(lat) == 17
    assert lat.top == c.full


def test_pentagon_interval_values():
    c = pentagon()
    # an atom: the open interval is empty, so only h_{-1} survives
    assert h(c, -1, [1, 3]) == 1
    # {1,3,4} covers two atoms, which give two isolated points
    assert h(c, 0, [1, 3, 4]) == 1
    # {1,2,3,4} lies in the lattice but its interval is contractible
    assert all(h(c, i, [1, 2, 3, 4]) == 0 for i in range(-2, 3))
    # the top carries the fundamental class
    assert h(c, 1, [1, 2, 3, 4, 5]) == 1
    assert h(c, -2, []) == 1
    assert h(c, 0, [1, 2]) == 0  # off the lattice


def test_pentagon_and_c47_total_betti():
    assert betti_table(pentagon()).total() == [1, 5, 5, 1]
    assert betti_table(cyclic_boundary(4, 7)).total() == [1, 7, 7, 1]
    assert betti_table(pd_sphere(3), QQ).total() == [1, 7, 12, 7, 1]


def test_betti_table_indexing():
    t = betti_table(pentagon())
    assert t[1, [1, 3]] == 1 and t[0, []] == 1 and t[2, [1, 2]] == 0


def test_order_complex_is_flag():
    c = pentagon()
    lat = build_lattice(c)
    oc, inside = interval_order_complex(lat, to_mask([1, 3, 4], 5))
    assert len(inside) == 2 and oc.m == 1
    with pytest.raises(NotInLattice):
        interval_order_complex(lat, to_mask([1, 2], 5))
    with pytest.raises(NotInLattice):
        interval_betti(lat, to_mask([1, 2], 5))


def test_generator_cap():
    masks = [(1 << i) | (1 << (i + 25)) for i in range(25)]
    with pytest.raises(TooLarge):
        build_lattice(MnfComplex.from_masks(50, masks, check=False))


@pytest.mark.parametrize(
    "c", [pentagon(), pd_sphere(3), cyclic_boundary(4, 7), cross_polytope(3), simplex_boundary(3)],
    ids=["pentagon", "pd3", "c47", "cross3", "simplex3"],
)
def test_duality_on_spheres(c):
    assert check_duality(c, GF2) == []
    assert check_duality(c, QQ) == []
    assert complements_in_lattice(c)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_duality_fails_off_spheres(k):
    assert check_duality(cross_minus_facet(k))


def test_cross_minus_facet_betti():
    assert betti_table(cross_minus_facet(3)).total() == [1, 4, 6, 3]
    assert len(check_duality(cross_minus_facet(3))) == 16


@settings(max_examples=60, deadline=None)
@given(complexes(max_n=6, max_m=6))
def test_lattice_matches_brute_force(c):
    assert {to_set(s) for s in build_lattice(c).elements} == brute_lattice(c.mnf)


@settings(max_examples=50, deadline=None)
@given(complexes(max_n=5, max_m=5), st.data())
def test_interval_homology_matches_chain_oracle(c, data):
    lat = build_lattice(c)
    s = data.draw(st.sampled_from(lat.elements))
    want = chain_homology(c.mnf, to_set(s))
    for method in ("crosscut", "order"):
        got = interval_betti(lat, s, QQ, method)
        k = max(len(got), len(want))
        assert got + [0] * (k - len(got)) == want + [0] * (k - len(want))


@settings(max_examples=50, deadline=None)
@given(complexes(max_n=6, max_m=6), st.sampled_from([None, 2]))
def test_betti_table_matches_hochster(c, p):
    field = QQ if p is None else FieldSpec(p)
    got = {(i, to_set(s)): v for (i, s), v in betti_table(c, field).entries.items()}
    assert got == hochster_table(c.n, c.mnf, p)


@settings(max_examples=40, deadline=None)
@given(complexes(max_n=6, max_m=6))
def test_first_betti_counts_nonfaces(c):
    t = betti_table(c).total()
    assert (t[1] if len(t) > 1 else 0) == c.m


def test_self_duality_of_total_betti_on_spheres():
    for c in [pentagon(), pd_sphere(3), cyclic_boundary(4, 7), cross_polytope(2)]:
        assert is_homology_sphere(c)
        t = betti_table(c).total()
        codim = c.n - c.d
        assert len(t) == codim + 1
        assert t == t[::-1]


def test_h_with_order_method_agrees():
    c = new_complex(5, [[1, 2], [2, 3], [3, 4, 5]])
    lat = build_lattice(c)
    for s in lat.elements:
        for i in range(-2, 4):
            assert h(c, i, s, lattice=lat) == h(c, i, s, lattice=lat, method="order")


def test_lattice_sizes_of_simple_families():
    for k in range(1, 5):
        assert len(build_lattice(simplex_boundary(k))) == 2
    assert len(build_lattice(cross_polytope(3))) == 8


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cross_polytope_betti_is_koszul(d):
    from math import comb

    assert betti_table(cross_polytope(d)).total() == [comb(d, i) for i in range(d + 1)]


def test_simplex_boundary_betti():
    t = betti_table(simplex_boundary(3))
    assert t.entries == {(0, 0): 1, (1, 0b1111): 1}
