"""Lattice arithmetic, exceptional classes, adjunction, splittings."""

import itertools

import pytest
from hypothesis import given, strategies as st

from hamfix.errors import InvalidBlowupCount, LatticeMismatch, NoExceptionalBasis
from hamfix.lattice import (
    CohClass,
    adjunction_genus,
    component_splittings,
    exceptional_classes,
    make_blowup_lattice,
    pair,
    product_lattice,
)


def cls(lattice, *coeffs):
    return CohClass(lattice, coeffs)


def test_blowup_lattice_construction():
    p2 = make_blowup_lattice(0)
    assert p2.rank == 1
    assert p2.gram == ((1,),)
    assert p2.anticanonical.coeffs == (3,)

    one = make_blowup_lattice(1)
    assert one.gram == ((1, 0), (0, -1))
    assert one.anticanonical.coeffs == (3, -1)

    three = make_blowup_lattice(3)
    assert three.anticanonical.coeffs == (3, -1, -1, -1)


@pytest.mark.parametrize("k", [-1, 9, 100])
def test_blowup_count_range(k):
    with pytest.raises(InvalidBlowupCount):
        make_blowup_lattice(k)


def test_product_lattice():
    p = product_lattice()
    assert p.gram == ((0, 1), (1, 0))
    assert p.anticanonical.coeffs == (2, 2)
    assert pair(p.basis_class(0), p.basis_class(1)) == 1


def test_pair_examples():
    one = make_blowup_lattice(1)
    assert pair(cls(one, 1, -1), cls(one, 1, -1)) == 0
    two = make_blowup_lattice(2)
    assert pair(cls(two, 3, -1, -1), cls(two, 2, -2, -1)) == 3
    three = make_blowup_lattice(3)
    e = cls(three, 2, -1, 0, -1)
    assert pair(e, e) == 2


def test_pair_mismatch():
    with pytest.raises(LatticeMismatch):
        pair(cls(make_blowup_lattice(1), 1, 0), cls(make_blowup_lattice(2), 1, 0, 0))


@given(
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    st.lists(st.integers(-9, 9), min_size=3, max_size=3),
    st.integers(-5, 5),
)
def test_pair_symmetric_bilinear(a, b, c, s):
    lat = make_blowup_lattice(2)
    ca, cb, cc = cls(lat, *a), cls(lat, *b), cls(lat, *c)
    assert pair(ca, cb) == pair(cb, ca)
    assert pair(ca + cb, cc) == pair(ca, cc) + pair(cb, cc)
    assert pair(s * ca, cb) == s * pair(ca, cb)


def test_gram_unimodular():
    for k in range(9):
        gram = make_blowup_lattice(k).gram
        det = 1
        for i in range(k + 1):
            det *= gram[i][i]
        assert det in (1, -1)


def test_exceptional_k1():
    one = make_blowup_lattice(1)
    assert exceptional_classes(one) == (cls(one, 0, 1),)


def test_exceptional_k2():
    two = make_blowup_lattice(2)
    got = set(c.coeffs for c in exceptional_classes(two))
    assert got == {(0, 1, 0), (0, 0, 1), (1, -1, -1)}


def _brute_force_exceptional(k, bound):
    """Independent oracle: direct product loop over the coefficient box."""
    lat = make_blowup_lattice(k)
    out = set()
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=k + 1):
        c = CohClass(lat, coeffs)
        if pair(c, c) == -1 and pair(lat.anticanonical, c) == 1:
            out.add(coeffs)
    return out


@pytest.mark.parametrize("k", [1, 2, 3])
def test_exceptional_brute_force_oracle(k):
    got = {c.coeffs for c in exceptional_classes(make_blowup_lattice(k))}
    assert got == _brute_force_exceptional(k, 3)


def test_exceptional_k3_is_the_small_list():
    # for three blow-ups only the basis classes and the pairwise line classes
    three = make_blowup_lattice(3)
    got = {c.coeffs for c in exceptional_classes(three)}
    expected = {
        (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
        (1, -1, -1, 0), (1, -1, 0, -1), (1, 0, -1, -1),
    }
    assert got == expected


def test_exceptional_permutation_invariance():
    three = make_blowup_lattice(3)
    got = {c.coeffs for c in exceptional_classes(three)}
    for perm in itertools.permutations(range(3)):
        permuted = {(c[0],) + tuple(c[1 + p] for p in perm) for c in got}
        assert permuted == got


def test_exceptional_all_genus_zero():
    for k in (1, 2, 3, 5):
        lat = make_blowup_lattice(k)
        for c in exceptional_classes(lat, 6):
            assert adjunction_genus(lat, c) == 0


def test_exceptional_product_raises():
    with pytest.raises(NoExceptionalBasis):
        exceptional_classes(product_lattice())


def test_adjunction_examples():
    p2 = make_blowup_lattice(0)
    assert adjunction_genus(p2, cls(p2, 2)) == 0
    assert adjunction_genus(p2, cls(p2, 3)) == 1
    one = make_blowup_lattice(1)
    assert adjunction_genus(one, cls(one, 1, -2)) is None


def test_splitting_two_conics():
    one = make_blowup_lattice(1)
    total = cls(one, 2, -2)
    out = component_splittings(one, total)
    assert out == [((cls(one, 1, -1), 0), (cls(one, 1, -1), 0))]


def test_splitting_plane_conic_connected():
    p2 = make_blowup_lattice(0)
    out = component_splittings(p2, cls(p2, 2))
    assert out == [((cls(p2, 2), 0),)]


def test_splitting_mixed_pair():
    two = make_blowup_lattice(2)
    out = component_splittings(two, cls(two, 2, -2, -1))
    assert out == [((cls(two, 1, -1, -1), 0), (cls(two, 1, -1, 0), 0))]


def _oracle_splittings(lattice, total, bound=3):
    """Exhaustive splitting oracle built from raw multiset enumeration."""
    volume = pair(lattice.anticanonical, total)
    box = [
        CohClass(lattice, c)
        for c in itertools.product(range(-bound, bound + 1), repeat=lattice.rank)
    ]
    good = []
    for c in box:
        vol = pair(lattice.anticanonical, c)
        g = adjunction_genus(lattice, c)
        if vol < 1 or g is None:
            continue
        if pair(c, c) >= 0 and any(
            pair(c, e) < 0 for e in exceptional_classes(lattice, 3)
        ):
            continue
        good.append((c, g, vol))
    results = set()
    for size in range(1, volume + 1):
        for combo in itertools.combinations_with_replacement(good, size):
            if sum(v for _, _, v in combo) != volume:
                continue
            s = lattice.zero()
            for c, _, _ in combo:
                s = s + c
            if s != total:
                continue
            if any(
                pair(a[0], b[0]) != 0 for a, b in itertools.combinations(combo, 2)
            ):
                continue
            # repeated classes must still be pairwise orthogonal
            counts = {}
            for c, g, v in combo:
                counts[c.coeffs] = counts.get(c.coeffs, 0) + 1
            if any(n > 1 and pair(CohClass(lattice, cf), CohClass(lattice, cf)) != 0
                   for cf, n in counts.items()):
                continue
            results.add(tuple(sorted((c.coeffs, g) for c, g, _ in combo)))
    return results


@pytest.mark.parametrize(
    "k,total",
    [(1, (2, -2)), (0, (2,)), (2, (2, -2, -1)), (1, (3, -1)), (0, (3,))],
)
def test_splitting_oracle_agreement(k, total):
    lat = make_blowup_lattice(k)
    got = {
        tuple(sorted((c.coeffs, g) for c, g in s))
        for s in component_splittings(lat, CohClass(lat, total), 3)
    }
    assert got == _oracle_splittings(lat, CohClass(lat, total))


def test_splitting_replay():
    # every returned splitting sums to the total with orthogonal parts
    two = make_blowup_lattice(2)
    for total in [(2, -2, -1), (2, -1, -1), (3, -1, -1)]:
        t = cls(two, *total)
        for splitting in component_splittings(two, t):
            s = two.zero()
            for c, g in splitting:
                assert adjunction_genus(two, c) == g
                s = s + c
            assert s == t
            for (a, _), (b, _) in itertools.combinations(splitting, 2):
                assert pair(a, b) == 0
