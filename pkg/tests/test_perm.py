import itertools
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import p_groupoids
from pgroupoids import (
    Permutation,
    automorphisms,
    denes_keedwell,
    generate_group,
    group_automorphisms,
    is_characteristic,
    is_dihedral,
    multiplication_groups,
    right_translation,
)
from pgroupoids.errors import NotBijective, NotSubgroup, OrderCapExceeded
from pgroupoids.mlt import left_multiplication_group, right_multiplication_group


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def brute_force_automorphism_count(G):
    """Try every bijection of the element list (only for tiny groups)."""
    els = list(G.elements)
    count = 0
    for img in itertools.permutations(range(len(els))):
        ok = all(
            els[img[els.index(a * b)]] == els[img[i]] * els[img[j]]
            for i, a in enumerate(els) for j, b in enumerate(els)
        )
        count += ok
    return count


def test_permutation_basics():
    p = cyc(4, (0, 1, 2))
    assert p(0) == 1 and p.order() == 3
    assert (p * p.inverse()).is_identity()
    assert p ** 3 == Permutation.identity(4)
    assert p ** -1 == p.inverse()
    # right action: p first, then q
    q = cyc(4, (0, 3))
    assert (p * q)(0) == q(p(0))
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def test_generate_group_examples(dk5):
    assert generate_group([cyc(2, (0, 1))]).order == 2
    assert generate_group([], degree=3).order == 1
    R = [right_translation(dk5, x) for x in range(5)]
    assert generate_group(R).order == 10


def test_group_invariants(dk5):
    G = multiplication_groups(dk5).full
    assert Permutation.identity(5) in G
    for g in G:
        assert g.inverse() in G
    for s in G.generators:
        assert s in G


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        generate_group([cyc(6, (0, 1)), cyc(6, (0, 1, 2, 3, 4, 5))], cap=100)


@settings(max_examples=30)
@given(st.permutations(list(range(5))), st.randoms(use_true_random=False))
def test_generation_is_order_independent(images, rnd):
    gens = [right_translation(denes_keedwell(5), x) for x in range(5)]
    gens.append(Permutation(tuple(images)))
    shuffled = gens[:]
    rnd.shuffle(shuffled)
    assert generate_group(gens).element_set() == generate_group(shuffled).element_set()


@pytest.mark.parametrize("n", [5, 7, 9, 11])
def test_right_group_of_dk_is_dihedral(n):
    G = right_multiplication_group(denes_keedwell(n))
    assert G.order == 2 * n
    assert is_dihedral(G) == n


def test_is_dihedral_other_cases():
    assert is_dihedral(generate_group([cyc(4, (0, 1, 2, 3))])) is None
    assert is_dihedral(generate_group([cyc(3, (0, 1)), cyc(3, (0, 1, 2))])) == 3
    assert is_dihedral(generate_group([cyc(4, (0, 1)), cyc(4, (2, 3))])) is None
    # cyclic of order 6 is not dihedral
    assert is_dihedral(generate_group([cyc(5, (0, 1, 2), (3, 4))])) is None


def test_small_automorphism_counts():
    C2 = generate_group([cyc(2, (0, 1))])
    assert len(group_automorphisms(C2)) == 1
    S3 = generate_group([cyc(3, (0, 1)), cyc(3, (0, 1, 2))])
    assert len(group_automorphisms(S3)) == brute_force_automorphism_count(S3) == 6
    V4 = generate_group([cyc(4, (0, 1)), cyc(4, (2, 3))])
    assert len(group_automorphisms(V4)) == brute_force_automorphism_count(V4) == 6


def test_automorphisms_are_homomorphisms():
    S3 = generate_group([cyc(3, (0, 1)), cyc(3, (0, 1, 2))])
    T = S3.cayley_table()
    for auto in group_automorphisms(S3):
        assert sorted(auto) == list(range(6))
        for i in range(6):
            for j in range(6):
                assert auto[T[i, j]] == T[auto[i], auto[j]]


@pytest.mark.parametrize("n,expected", [(5, 20), (7, 42)])
def test_mlt_automorphism_counts(n, expected):
    # expected values from an exhaustive generator-image search with a full
    # Cayley-table homomorphism check
    G = multiplication_groups(denes_keedwell(n)).full
    assert len(group_automorphisms(G)) == expected


def test_automorphism_cap():
    S3 = generate_group([cyc(3, (0, 1)), cyc(3, (0, 1, 2))])
    with pytest.raises(OrderCapExceeded):
        group_automorphisms(S3, cap=5)


def test_characteristic_examples(dk5):
    m = multiplication_groups(dk5)
    assert is_characteristic(m.right, m.full)
    trivial = generate_group([], degree=5)
    assert is_characteristic(trivial, m.full)
    V4 = generate_group([cyc(4, (0, 1)), cyc(4, (2, 3))])
    H = generate_group([cyc(4, (0, 1))])
    assert not is_characteristic(H, V4)
    with pytest.raises(NotSubgroup):
        is_characteristic(generate_group([cyc(4, (0, 1, 2))]), V4)


@pytest.mark.parametrize("n", [5, 7])
def test_both_sides_characteristic(n):
    m = multiplication_groups(denes_keedwell(n))
    assert is_characteristic(m.right, m.full)
    assert is_characteristic(m.left, m.full)


def test_multiplication_group_orders(dk5, ham9):
    m = multiplication_groups(dk5)
    assert (m.right.order, m.full.order) == (10, 20)
    assert m.right.is_subgroup_of(m.full) and m.left.is_subgroup_of(m.full)
    one = multiplication_groups(denes_keedwell(1))
    assert (one.right.order, one.left.order, one.full.order) == (1, 1, 1)
    with pytest.raises(NotBijective):
        multiplication_groups(ham9)
    with pytest.raises(NotBijective):
        left_multiplication_group(ham9)
    assert right_multiplication_group(ham9).order > 1


@pytest.mark.parametrize("n", [5, 7, 9, 11, 13])
def test_right_group_order(n):
    assert right_multiplication_group(denes_keedwell(n)).order == 2 * n


@pytest.mark.parametrize("n", [5, 7, 9])
def test_automorphisms_equal_multiplication_group(n):
    T = denes_keedwell(n)
    phi = sum(1 for a in range(1, n) if gcd(a, n) == 1)
    autos = {a.images for a in automorphisms(T)}
    mlt = {g.images for g in multiplication_groups(T).full}
    assert len(autos) == n * phi
    assert autos == mlt


@settings(deadline=None, max_examples=30)
@given(p_groupoids(orders=(3, 5)))
def test_right_generators_are_involutions(T):
    for g in right_multiplication_group(T).generators:
        assert g.order() == 2
        assert len(g.fixed_points()) == 1
