import itertools

import pytest

from oracles import all_sections, perm_sign
from thingeom.battery import classify_double_covers, covering_from_signed, split_covering
from thingeom.covering import (
    Covering,
    Involution,
    OrientedCovering,
    clifford_product_iso,
    clifford_set,
    covering_from_involution,
    covering_isomorphism,
    discriminant,
    disjoint_union_covering,
    involution_from_covering,
    orient,
    oriented_isomorphism,
    parity_relation_is_partition,
    sign_law_holds,
)
from thingeom.group_core import InvariantError
from thingeom.gset import GSet, is_isomorphic
from thingeom.smallgroups import cyclic, direct_product, symmetric, trivial

# points p0 p1 q0 q1 = 0 1 2 3, group acts by (p0 q0)(p1 q1), sigma = (p0 p1)(q0 q1)
P0, P1, Q0, Q1 = range(4)


@pytest.fixture
def c2_n2():
    G = cyclic(2)
    Y = GSet.from_images(G, 4, [(Q0, Q1, P0, P1)])
    return covering_from_involution(Involution(Y, (P1, P0, Q1, Q0)))


def split_i_iplus4():
    Y = GSet.trivial(trivial(), 8)
    return covering_from_involution(Involution(Y, tuple((i + 4) % 8 for i in range(8))))


def test_covering_validation():
    G = cyclic(2)
    Y = GSet.from_images(G, 4, [(1, 0, 2, 3)])
    with pytest.raises(InvariantError):
        Covering.from_total(Y, (0, 0, 0, 1))  # unequal fibers
    with pytest.raises(InvariantError):
        Covering.from_total(Y, (0, 1, 0, 1))  # base action not well defined
    with pytest.raises(InvariantError):
        Covering.from_total(GSet.trivial(G, 0), ())


def test_involution_validation():
    Y = GSet.trivial(trivial(), 2)
    with pytest.raises(InvariantError):
        Involution(Y, (0, 1))
    G = cyclic(3)
    Z = GSet.from_images(G, 6, [(1, 2, 0, 3, 4, 5)])
    with pytest.raises(InvariantError):
        Involution(Z, (3, 4, 5, 0, 1, 2))  # does not commute


def test_involution_covering_examples():
    Y = GSet.trivial(trivial(), 2)
    inv = Involution(Y, (1, 0))
    cov = covering_from_involution(inv)
    assert cov.n == 1 and cov.degree == 2
    assert involution_from_covering(cov).sigma == inv.sigma
    split = split_i_iplus4()
    assert split.n == 4 and split.degree == 2
    assert involution_from_covering(split).sigma == tuple((i + 4) % 8 for i in range(8))


def test_round_trip_from_covering(c2_n2):
    again = covering_from_involution(involution_from_covering(c2_n2))
    assert again.pi == c2_n2.pi and again.base == c2_n2.base


def test_involution_needs_degree_two():
    Y = GSet.trivial(trivial(), 3)
    cov = Covering.from_total(Y, (0, 0, 0))
    assert cov.degree == 3
    with pytest.raises(ValueError):
        involution_from_covering(cov)
    with pytest.raises(ValueError):
        clifford_set(cov)


def test_clifford_n1_is_the_covering_itself():
    cov = covering_from_involution(Involution(GSet.trivial(trivial(), 2), (1, 0)))
    C = clifford_set(cov)
    assert [C.points(i) for i in range(2)] == [(0,), (1,)]
    assert C.complement == (1, 0)
    assert C.class_of[0] != C.class_of[1]


def test_split4_sections_and_classes():
    C = clifford_set(split_i_iplus4())
    assert len(C) == 16
    assert list(map(len, C.classes)) == [8, 8]
    # class sizes agree with the even/odd split of the choice count
    assert all(C.class_of[i] == bin(i).count("1") % 2 for i in range(16))


def test_c2_n2_example(c2_n2):
    C = clifford_set(c2_n2)
    as_sets = {frozenset(C.points(i)): i for i in range(4)}
    g = cyclic(2).generators[0]
    fixed = {frozenset(C.points(i)) for i in range(4) if C.gset.act(i, g) == i}
    assert fixed == {frozenset({P0, Q0}), frozenset({P1, Q1})}
    assert C.gset.act(as_sets[frozenset({P0, Q1})], g) == as_sets[frozenset({P1, Q0})]
    classes = {frozenset(frozenset(C.points(i)) for i in b) for b in C.classes}
    assert classes == {
        frozenset({frozenset({P0, Q0}), frozenset({P1, Q1})}),
        frozenset({frozenset({P0, Q1}), frozenset({P1, Q0})}),
    }
    # complement pairs land in the same class when n is even
    assert all(C.class_of[i] == C.class_of[C.complement[i]] for i in range(4))


def test_sections_match_brute_force():
    G = cyclic(4)
    for cov in classify_double_covers(G, 3):
        C = clifford_set(cov)
        brute = set(all_sections(cov.fibers))
        assert {frozenset(C.points(i)) for i in range(len(C))} == brute


def test_discriminant_examples():
    cov = covering_from_involution(Involution(GSet.trivial(trivial(), 2), (1, 0)))
    D = discriminant(clifford_set(cov))
    assert D.blocks == ((0,), (1,))
    # a transposition on Y swaps the classes
    G = cyclic(2)
    Y = GSet.from_images(G, 6, [(1, 0, 2, 3, 4, 5)])
    cov = Covering.from_total(Y, (0, 0, 1, 1, 2, 2))
    C = clifford_set(cov)
    assert C.swaps_classes(G.generators[0])
    assert sign_law_holds(C)


def test_sign_law_oracle_over_sections():
    for G in (cyclic(2), cyclic(4), symmetric(3), direct_product(cyclic(2), cyclic(2))):
        for cov in classify_double_covers(G, 3):
            C = clifford_set(cov)
            assert parity_relation_is_partition(C)
            for g in G.elements:
                p = cov.total.action[g]
                odd = perm_sign(p) == -1
                for i in range(len(C)):
                    swapped = C.class_of[C.gset.act(i, g)] != C.class_of[i]
                    assert swapped == odd


def test_anchor_independence():
    G = cyclic(4)
    for cov in classify_double_covers(G, 3):
        C = clifford_set(cov)
        other = tuple(max(f) for f in cov.fibers)
        D = clifford_set(cov, representatives=other)
        part_c = {frozenset(C.sections[i] for i in b) for b in C.classes}
        part_d = {frozenset(D.sections[i] for i in b) for b in D.classes}
        assert part_c == part_d


def test_orient_examples(c2_n2):
    assert orient(split_covering(trivial(), 3)) is not None
    swap = Covering.from_total(GSet.from_images(cyclic(2), 2, [(1, 0)]), (0, 0))
    assert orient(swap) is None
    oc = orient(c2_n2)
    assert oc is not None and oc.label_of(0) == 1
    assert orient(c2_n2, 2).label_of(0) == 2
    with pytest.raises(InvariantError):
        OrientedCovering(swap)


def test_product_iso_examples():
    T = trivial()
    f = clifford_product_iso(split_covering(T, 1), split_covering(T, 1))
    assert f.is_bijective() and f.source.size == 4
    G = cyclic(2)
    a = covering_from_signed(G, 1, [(1, 0)])
    for b in classify_double_covers(G, 2):
        f = clifford_product_iso(a, b)
        assert f.is_bijective() and f.source.size == 8


def test_product_iso_complements_and_classes():
    G = cyclic(4)
    for a, b in itertools.product(classify_double_covers(G, 1), classify_double_covers(G, 2)):
        C1, C2 = clifford_set(a), clifford_set(b)
        f = clifford_product_iso(a, b)
        C = clifford_set(disjoint_union_covering(a, b))
        N2 = len(C2)
        for i in range(len(C1)):
            for j in range(N2):
                k = f.mapping[i * N2 + j]
                assert f.mapping[C1.complement[i] * N2 + C2.complement[j]] == C.complement[k]
                assert C.class_of[k] == (C1.class_of[i] + C2.class_of[j]) % 2


def test_covering_isomorphism_requires_fiber_compatibility():
    G = cyclic(2)
    Y = GSet.from_images(G, 4, [(1, 0, 3, 2)])
    a = Covering.from_total(Y, (0, 0, 1, 1))
    b = Covering.from_total(Y, (0, 1, 0, 1))
    assert is_isomorphic(a.total, b.total) is not None
    assert covering_isomorphism(a, b) is None
    iso = covering_isomorphism(a, a)
    assert iso.total_map == (0, 1, 2, 3) and iso.base_map == (0, 1)


def test_oriented_isomorphism_distinguishes_labels():
    oc = orient(split_covering(trivial(), 1))
    # swapping a and b is an isomorphism that reverses orientation
    assert oriented_isomorphism(oc, oc.flipped()) is not None
    C2 = cyclic(2)
    oc = orient(covering_from_signed(C2, 2, [(1, 0, 3, 2)]))
    iso = oriented_isomorphism(oc, oc.flipped())
    plain = covering_isomorphism(oc.covering, oc.covering)
    assert plain is not None
    assert iso is not None  # an odd automorphism exists (swap a single fiber)
