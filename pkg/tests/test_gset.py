import itertools

import pytest

from oracles import orbit_count
from thingeom.group_core import InvariantError, symmetric_elements
from thingeom.gset import (
    GMap,
    GSet,
    classify_gsets,
    coset_gset,
    disjoint_union,
    grassmannian,
    grassmannian_masks,
    is_isomorphic,
    orbit_signature,
    orbits,
    product,
)
from thingeom.smallgroups import cyclic, direct_product, library, symmetric, trivial


@pytest.fixture
def c2():
    return cyclic(2)


def regular2(G):
    return GSet.from_images(G, 2, [(1, 0)])


def test_action_must_be_homomorphism(c2):
    with pytest.raises(InvariantError):
        GSet.from_images(cyclic(3), 3, [(1, 0, 2)])  # order-2 image for an order-3 generator
    X = regular2(c2)
    assert X.action[0] == (0, 1)


def test_product_examples(c2):
    T = trivial()
    P = product(GSet.trivial(T, 2), GSet.trivial(T, 3))
    assert P.size == 6 and len(orbits(P)) == 6
    X = regular2(c2)
    XX = product(X, X)
    assert XX.size == 4
    assert sorted(map(len, orbits(XX))) == [2, 2]
    one = GSet.trivial(c2, 1)
    assert is_isomorphic(product(X, one), X) is not None


def test_product_is_lexicographic_pairs(c2):
    X = GSet.from_images(c2, 2, [(1, 0)])
    Y = GSet.from_images(c2, 3, [(0, 2, 1)])
    P = product(X, Y)
    g = c2.generators[0]
    for x in range(2):
        for y in range(3):
            assert P.act(x * 3 + y, g) == X.act(x, g) * 3 + Y.act(y, g)


def test_disjoint_union(c2):
    X = regular2(c2)
    Y = GSet.from_images(c2, 3, [(0, 2, 1)])
    U = disjoint_union(X, Y)
    assert U.size == 5
    assert orbits(U) == orbits(X) + [[x + 2 for x in o] for o in orbits(Y)]
    assert is_isomorphic(disjoint_union(X, GSet.trivial(c2, 0)), X) is not None


def test_group_mismatch():
    with pytest.raises(ValueError):
        product(GSet.trivial(cyclic(2), 1), GSet.trivial(cyclic(3), 1))
    with pytest.raises(ValueError):
        disjoint_union(GSet.trivial(cyclic(2), 1), GSet.trivial(cyclic(3), 1))
    with pytest.raises(ValueError):
        is_isomorphic(GSet.trivial(cyclic(2), 1), GSet.trivial(cyclic(3), 1))


def test_orbit_examples(c2):
    assert orbits(GSet.trivial(trivial(), 4)) == [[0], [1], [2], [3]]
    assert orbits(regular2(c2)) == [[0, 1]]
    S3 = symmetric(3)
    assert orbits(GSet.from_images(S3, 3, S3.gen_perms)) == [[0, 1, 2]]


def test_grassmannian_examples():
    X = GSet.trivial(trivial(), 4)
    assert grassmannian(X, 2).size == 6
    assert grassmannian(X, 4).size == 1
    C4 = cyclic(4)
    Y = GSet.from_images(C4, 4, [(1, 2, 3, 0)])
    assert sorted(map(len, orbits(grassmannian(Y, 2)))) == [2, 4]
    with pytest.raises(ValueError):
        grassmannian(X, 0)
    with pytest.raises(ValueError):
        grassmannian(X, 5)


def test_grassmannian_ordering_is_by_mask():
    X = GSet.trivial(trivial(), 4)
    assert grassmannian_masks(X, 2) == [3, 5, 6, 9, 10, 12]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_grassmannian_complement_duality(k):
    G = symmetric(4)
    X = GSet.from_images(G, 4, G.gen_perms)
    A, B = grassmannian(X, k), grassmannian(X, 4 - k)
    ma, mb = grassmannian_masks(X, k), grassmannian_masks(X, 4 - k)
    f = tuple(mb.index(m ^ 0b1111) for m in ma)
    GMap(A, B, f)  # validates equivariance


def test_is_isomorphic_examples(c2):
    X = regular2(c2)
    f = is_isomorphic(X, X)
    assert f is not None and f.mapping == (0, 1)
    Y = GSet.from_images(c2, 2, [(1, 0)])
    assert is_isomorphic(X, Y) is not None
    assert is_isomorphic(GSet.trivial(c2, 2), X) is None


def test_isomorphism_witness_is_least_and_invertible():
    G = cyclic(4)
    X = GSet.from_images(G, 6, [(1, 2, 3, 0, 5, 4)])
    relabel = (3, 5, 0, 1, 4, 2)
    inv = tuple(relabel.index(i) for i in range(6))
    # Y = X transported along relabel
    Y = GSet.from_images(G, 6, [tuple(relabel[p[inv[i]]] for i in range(6)) for p in X.gen_images])
    f = is_isomorphic(X, Y)
    assert f is not None
    brute = [h for h in itertools.permutations(range(6))
             if all(h[p[x]] == q[h[x]] for p, q in zip(X.gen_images, Y.gen_images) for x in range(6))]
    assert f.mapping == min(brute)
    assert f.inverse().then(f).mapping == tuple(range(6))


def test_coset_gset():
    S3 = symmetric(3)
    H = S3.subgroup_closure([S3.generators[0]])
    X = coset_gset(S3, H)
    assert X.size == 3
    assert orbits(X) == [[0, 1, 2]]
    assert len(X.stabilizer(0)) == 2


@pytest.mark.parametrize("G,n,expected", [
    (trivial(), 3, 1),
    (cyclic(2), 4, 3),
    (cyclic(2), 2, 2),
    (symmetric(3), 3, 3),
])
def test_classify_examples(G, n, expected):
    assert len(classify_gsets(G, n)) == expected


def _all_actions(G, n):
    """Every action on n points, by filtering all generator-image tuples."""
    out = []
    for imgs in itertools.product(symmetric_elements(n), repeat=len(G.gen_perms)):
        try:
            out.append(GSet.from_images(G, n, imgs))
        except InvariantError:
            pass
    return out


@pytest.mark.parametrize("G,n", [
    (cyclic(2), 3), (cyclic(3), 4), (cyclic(4), 4), (symmetric(3), 4),
    (direct_product(cyclic(2), cyclic(2)), 4), (cyclic(2), 5), (cyclic(4), 5),
])
def test_classification_is_complete_and_irredundant(G, n):
    reps = classify_gsets(G, n)
    for a, b in itertools.combinations(reps, 2):
        assert is_isomorphic(a, b) is None
    for X in _all_actions(G, n):
        assert sum(is_isomorphic(X, R) is not None for R in reps) == 1


@pytest.mark.parametrize("name,G", library(8))
def test_isomorphism_agrees_with_orbit_signature(name, G):
    reps = classify_gsets(G, 4)
    for a in reps:
        for b in reps:
            iso = is_isomorphic(a, b)
            if iso is not None:
                assert orbit_signature(a) == orbit_signature(b)
                back = iso.inverse()
                assert is_isomorphic(b, a) is not None and back.then(iso).mapping == tuple(range(4))


def test_orbit_count_matches_union_find():
    G = direct_product(cyclic(2), cyclic(3))
    for X in classify_gsets(G, 5):
        assert len(orbits(X)) == orbit_count(X.size, X.gen_images)


def test_gmap_rejects_non_equivariant(c2):
    X = regular2(c2)
    with pytest.raises(InvariantError):
        GMap(X, GSet.trivial(c2, 2), (0, 1))
