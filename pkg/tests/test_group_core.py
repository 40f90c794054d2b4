import pytest

from oracles import count_hom_classes, hyperoctahedral_group, is_hom_by_graph, naive_closure, symmetric_group
from thingeom.group_core import (
    SizeLimitError,
    compose,
    conjugacy_classes,
    enumerate_homs_up_to_conjugacy,
    format_cycles,
    group_from_generators,
    hyperoctahedral_elements,
    inverse,
    is_hyperoctahedral,
    parse_cycles,
    sign,
)
from thingeom.smallgroups import cyclic, direct_product, library, symmetric, trivial


def test_orders_of_spec_examples():
    assert group_from_generators(2, [(1, 0)]).order == 2
    assert group_from_generators(3, [(1, 0, 2), (1, 2, 0)]).order == 6
    assert group_from_generators(1, []).order == 1


@pytest.mark.parametrize("name,G", library(12))
def test_library_orders_match_naive_closure(name, G):
    assert G.order == len(naive_closure(G.gen_perms, G.degree))


def test_bad_input():
    with pytest.raises(ValueError):
        group_from_generators(0, [])
    with pytest.raises(ValueError):
        group_from_generators(3, [(0, 0, 1)])


def test_breadth_first_numbering():
    G = group_from_generators(3, [(1, 0, 2), (1, 2, 0)])
    assert G.perm_of[0] == (0, 1, 2)
    assert G.perm_of[1] == (1, 0, 2)
    assert G.perm_of[2] == (1, 2, 0)


@pytest.mark.parametrize("name,G", library(12))
def test_table_axioms(name, G):
    for x in G.elements:
        assert G.mult[0][x] == x == G.mult[x][0]
        assert G.mult[G.inv[x]][x] == 0
        for y in G.elements:
            assert G.perm_of[G.mult[x][y]] == compose(G.perm_of[x], G.perm_of[y])
    for x in G.elements:
        for y in G.elements:
            for z in G.elements:
                assert G.mult[G.mult[x][y]][z] == G.mult[x][G.mult[y][z]]
    assert len(set(G.perm_of)) == G.order
    assert G.subgroup_closure(G.generators) == frozenset(G.elements)


def test_right_action_convention_asymmetric():
    # g = (0 1), h = (0 1 2): first g then h sends 0 -> 1 -> 2
    g, h = (1, 0, 2), (1, 2, 0)
    assert compose(g, h) == (2, 1, 0)
    assert compose(h, g) == (0, 2, 1)
    G = group_from_generators(3, [g, h])
    gh = G.mult[G.index_of(g)][G.index_of(h)]
    assert G.perm_of[gh][0] == 2


def test_conjugacy_class_counts():
    assert len(conjugacy_classes(trivial())) == 1
    assert len(conjugacy_classes(cyclic(2))) == 2
    S3 = symmetric(3)
    classes = conjugacy_classes(S3)
    assert len(classes) == 3
    assert sorted(map(len, classes)) == [1, 2, 3]
    assert [b[0] for b in classes] == sorted(b[0] for b in classes)


def test_cycle_notation_roundtrip():
    p = parse_cycles("(0 1)(2 3)", 5)
    assert p == (1, 0, 3, 2, 4)
    assert format_cycles(p) == "(0 1)(2 3)"
    assert parse_cycles("()", 3) == (0, 1, 2)
    with pytest.raises(ValueError):
        parse_cycles("(0 1", 3)
    with pytest.raises(ValueError):
        parse_cycles("(0 5)", 3)


def test_sign_and_inverse():
    assert sign((1, 0, 2)) == -1
    assert sign((1, 2, 0)) == 1
    p = (2, 0, 3, 1)
    assert compose(p, inverse(p)) == (0, 1, 2, 3)


def test_hyperoctahedral_elements():
    for n in (1, 2, 3):
        elems = hyperoctahedral_elements(n)
        assert sorted(elems) == sorted(hyperoctahedral_group(n))
        assert all(is_hyperoctahedral(p) for p in elems)
    assert len(hyperoctahedral_elements(4)) == 384


@pytest.mark.parametrize("G,n,target,expected", [
    (cyclic(2), 2, "symmetric", 2),
    (cyclic(2), 4, "symmetric", 3),
    (trivial(), 3, "symmetric", 1),
    (trivial(), 2, "hyperoctahedral", 1),
    (cyclic(2), 1, "hyperoctahedral", 2),
    (cyclic(2), 2, "hyperoctahedral", 4),
    (cyclic(2), 3, "hyperoctahedral", 6),
    (symmetric(3), 3, "symmetric", 3),
    (symmetric(3), 4, "symmetric", 4),
    (direct_product(cyclic(2), cyclic(2)), 4, "symmetric", 11),
    (direct_product(cyclic(2), cyclic(2)), 2, "hyperoctahedral", 16),
    (cyclic(3), 2, "hyperoctahedral", 1),
])
def test_hom_class_counts(G, n, target, expected):
    reps = enumerate_homs_up_to_conjugacy(G, n, target)
    assert len(reps) == expected


@pytest.mark.parametrize("G,n,target", [
    (cyclic(2), 4, "symmetric"),
    (symmetric(3), 3, "symmetric"),
    (cyclic(4), 2, "hyperoctahedral"),
    (direct_product(cyclic(2), cyclic(2)), 2, "hyperoctahedral"),
])
def test_homs_against_exhaustive_filter(G, n, target):
    elems = symmetric_group(n) if target == "symmetric" else hyperoctahedral_group(n)
    reps = enumerate_homs_up_to_conjugacy(G, n, target)
    assert len(reps) == count_hom_classes(G, elems)
    for h in reps:
        assert is_hom_by_graph(G, h)
    # no two representatives are conjugate, and each is least in its class
    for h in reps:
        conj = {tuple(compose(compose(inverse(t), p), t) for p in h) for t in elems}
        assert min(conj) == h
        assert not (conj & (set(reps) - {h}))
    assert reps == sorted(reps)


def test_enumeration_deterministic_across_workers():
    G = direct_product(cyclic(2), cyclic(4))
    assert enumerate_homs_up_to_conjugacy(G, 3, "hyperoctahedral", workers=1) == \
        enumerate_homs_up_to_conjugacy(G, 3, "hyperoctahedral", workers=4)


def test_enumeration_limits():
    with pytest.raises(ValueError):
        enumerate_homs_up_to_conjugacy(cyclic(2), 0)
    with pytest.raises(SizeLimitError):
        enumerate_homs_up_to_conjugacy(symmetric(5), 2)
    assert len(enumerate_homs_up_to_conjugacy(symmetric(5), 2, max_order=120)) == 2
