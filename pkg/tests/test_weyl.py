"""Group algebra and orbit machinery for the signed-permutation groups."""

from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasicut import weyl


def random_element(draw, n):
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return weyl.GroupElement(tuple(s * p for s, p in zip(signs, perm)))


elements = st.integers(min_value=3, max_value=6).flatmap(
    lambda n: st.tuples(
        st.permutations(range(1, n + 1)),
        st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
    ).map(lambda t: weyl.GroupElement(tuple(s * p for s, p in zip(t[1], t[0]))))
)


def pair_same_rank(n):
    one = st.tuples(
        st.permutations(range(1, n + 1)),
        st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n),
    ).map(lambda t: weyl.GroupElement(tuple(s * p for s, p in zip(t[1], t[0]))))
    return st.tuples(one, one, one)


@given(st.integers(min_value=3, max_value=6).flatmap(pair_same_rank))
@settings(max_examples=80, deadline=None)
def test_group_laws(gh):
    g, h, k = gh
    n = g.rank
    e = weyl.GroupElement.identity(n)
    assert (g * h) * k == g * (h * k)
    assert g * e == g and e * g == g
    assert g * g.inverse() == e
    assert g.inverse().inverse() == g


@given(st.integers(min_value=3, max_value=6).flatmap(pair_same_rank))
@settings(max_examples=50, deadline=None)
def test_matrix_representation_is_faithful(gh):
    g, h, _ = gh
    assert np.array_equal((g * h).matrix(), g.matrix() @ h.matrix())
    assert np.array_equal(g.inverse().matrix(), g.matrix().T)


@given(st.integers(min_value=3, max_value=6).flatmap(pair_same_rank))
@settings(max_examples=50, deadline=None)
def test_apply_matches_matrix(gh):
    g, _, _ = gh
    v = np.arange(1, g.rank + 1, dtype=float)
    assert np.allclose(np.array(g.apply(v), dtype=float), g.matrix() @ v)


def test_generators_are_involutions():
    for n in (2, 4, 6):
        datum = weyl.build_root_datum(n)
        e = weyl.GroupElement.identity(n)
        for i in range(1, n + 1):
            r = weyl.generator(i, n)
            assert r * r == e
            # reflection through the simple root, checked on the root itself
            alpha = datum.simple_roots[i - 1]
            assert r.apply(alpha) == tuple(-x for x in alpha)


def test_braid_relations_n4():
    n = 4
    e = weyl.GroupElement.identity(n)
    r = [weyl.generator(i, n) for i in range(1, n + 1)]
    assert (r[0] * r[1]).order() == 3
    assert (r[1] * r[2]).order() == 3
    assert (r[2] * r[3]).order() == 4
    assert (r[0] * r[2]).order() == 2
    assert (r[0] * r[3]).order() == 2
    assert (r[0] * r[1] * r[2] * r[3]) ** 8 == e


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_full_group_order(n):
    gens = [weyl.generator(i, n) for i in range(1, n + 1)]
    assert len(weyl.closure(gens)) == 2**n * math.factorial(n)


def test_rank_range_guard():
    with pytest.raises(weyl.RankRangeError):
        weyl.build_root_datum(1)
    with pytest.raises(weyl.RankRangeError):
        weyl.build_root_datum(9)


def test_simple_roots_and_weights():
    datum = weyl.build_root_datum(4)
    R = datum.simple_roots_array()
    assert np.array_equal(R[0], [1, -1, 0, 0])
    assert np.array_equal(R[3], [0, 0, 0, 1])
    W = datum.weights_array()
    # defining relation: (omega_i, alpha_j^v) = delta_ij
    coroots = 2 * R / np.einsum("ij,ij->i", R, R)[:, None]
    assert np.allclose(W @ coroots.T, np.eye(4))
    assert np.allclose(W[3], [0.5, 0.5, 0.5, 0.5])


@given(
    st.integers(min_value=3, max_value=6).flatmap(
        lambda n: st.lists(
            st.integers(min_value=-4, max_value=4), min_size=n, max_size=n
        )
    )
)
@settings(max_examples=60, deadline=None)
def test_weight_axis_coordinate_round_trip(a):
    n = len(a)
    datum = weyl.build_root_datum(n)
    v = weyl.lattice_vector(datum, a)
    assert all(x.denominator == 1 for x in map(Fraction, v))
    c = [int(x) for x in v]
    assert weyl.weight_coords(datum, c) == tuple(a)


def test_lattice_vector_hits_integer_lattice():
    datum = weyl.build_root_datum(5)
    # suffix sums of a give the axis coordinates
    assert weyl.lattice_vector(datum, (1, 0, 0, 0, 0)) == (1, 0, 0, 0, 0)
    assert weyl.lattice_vector(datum, (0, 0, 0, 0, 1)) == (1, 1, 1, 1, 1)
    assert weyl.lattice_vector(datum, (1, 1, 0, 0, 1)) == (3, 2, 1, 1, 1)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_orbit_cardinalities(n):
    datum = weyl.build_root_datum(n)
    e1 = (1,) + (0,) * (n - 1)
    e2 = (0, 1) + (0,) * (n - 2)
    en = (0,) * (n - 1) + (1,)
    assert len(weyl.orbit(datum, e1)) == 2 * n
    assert len(weyl.orbit(datum, e2)) == 2 * n * (n - 1)
    assert len(weyl.orbit(datum, en)) == 2**n


def test_orbit_points_are_exact_and_closed():
    datum = weyl.build_root_datum(4)
    orb = weyl.orbit(datum, (0, 0, 0, 1))
    pts = set(orb.points)
    assert len(pts) == 16
    for p in orb.points:
        for i in range(1, 5):
            assert tuple(weyl.apply_generator(datum, i, p)) in pts


@pytest.mark.parametrize("n,expected", [(4, 8), (5, 10), (6, 12)])
def test_dihedral_generator_product_order(n, expected):
    datum = weyl.build_root_datum(n)
    r1, r2 = weyl.dihedral_generators(datum)
    e = weyl.GroupElement.identity(n)
    assert r1 * r1 == e and r2 * r2 == e
    assert (r1 * r2).order() == expected
    assert len(weyl.closure([r1, r2])) == 2 * expected


def test_dn_subgroup_order():
    datum = weyl.build_root_datum(3)
    gens = weyl.dn_generators(datum)
    assert len(weyl.closure(list(gens))) == 24


def test_icosahedral_generators():
    datum = weyl.build_root_datum(6)
    R1, R2, R3 = weyl.h3_generators(datum)
    e = weyl.GroupElement.identity(6)
    assert R1**2 == e and R2**2 == e and R3**2 == e
    assert (R1 * R2) ** 3 == e
    assert (R2 * R3) ** 5 == e
    assert (R1 * R3) ** 2 == e
    assert len(weyl.closure([R1, R2, R3])) == 120


def test_icosahedral_alternate_generators_satisfy_same_relations():
    datum = weyl.build_root_datum(6)
    R1, R2, R3 = weyl.h3_generators_alternate(datum)
    e = weyl.GroupElement.identity(6)
    assert (R1 * R2) ** 3 == e
    assert (R2 * R3) ** 5 == e
    assert (R1 * R3) ** 2 == e
    assert len(weyl.closure([R1, R2, R3])) == 120


def test_antiprismatic_generators():
    datum = weyl.build_root_datum(5)
    R1, R2, R3 = weyl.d5d_generators(datum)
    e = weyl.GroupElement.identity(5)
    assert (R1 * R2).order() == 5
    # R3 is central inversion
    assert R3.matrix().tolist() == (-np.eye(5)).tolist()
    assert R3 * R3 == e
    assert len(weyl.closure([R1, R2, R3])) == 20
