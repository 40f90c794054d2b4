"""Deterministic families of test objects built from the classifier."""

from __future__ import annotations

from typing import Iterator

from .covering import Covering, OrientedCovering, disjoint_union_covering, orient
from .group_core import FiniteGroup, enumerate_homs_up_to_conjugacy
from .gset import GSet, classify_gsets
from .smallgroups import library


def covering_from_signed(G: FiniteGroup, n: int, images) -> Covering:
    """Double covering of 2n points paired as (2i, 2i+1), from hyperoctahedral images."""
    Y = GSet.from_images(G, 2 * n, images)
    return Covering.from_total(Y, [y // 2 for y in range(2 * n)])


def split_covering(G: FiniteGroup, n: int) -> Covering:
    return covering_from_signed(G, n, [tuple(range(2 * n))] * len(G.gen_perms))


def classify_double_covers(G: FiniteGroup, n: int, workers: int = 1) -> list[Covering]:
    """One double covering with n-point base per isomorphism class."""
    homs = enumerate_homs_up_to_conjugacy(G, n, "hyperoctahedral", workers=workers)
    return [covering_from_signed(G, n, h) for h in homs]


def classify_oriented(G: FiniteGroup, n: int, workers: int = 1) -> list[OrientedCovering]:
    """Both orientations of every orientable class from :func:`classify_double_covers`.

    The list may contain isomorphic oriented objects (an orientation
    reversing automorphism identifies the two labellings).
    """
    out = []
    for cov in classify_double_covers(G, n, workers):
        oc = orient(cov)
        if oc is not None:
            out += [oc, oc.flipped()]
    return out


def groups(max_order: int) -> list[tuple[str, FiniteGroup]]:
    return library(max_order)


def four_point_gsets(max_order: int = 12) -> Iterator[tuple[str, GSet]]:
    for name, G in groups(max_order):
        for X in classify_gsets(G, 4):
            yield name, X


def oriented_d3_objects(max_order: int = 12) -> Iterator[tuple[str, OrientedCovering]]:
    for name, G in groups(max_order):
        for oc in classify_oriented(G, 3):
            yield name, oc


def oriented_d4_objects(max_order: int = 8) -> Iterator[tuple[str, OrientedCovering]]:
    for name, G in groups(max_order):
        for oc in classify_oriented(G, 4):
            yield name, oc


CYCLIC_FOR_LARGE_N = ("C2", "C3", "C4", "C6")


def double_cover_battery(max_n: int = 6, max_order: int = 12) -> Iterator[tuple[str, int, Covering]]:
    """Double coverings with base size up to ``max_n`` over groups up to ``max_order``.

    Base sizes 1..3 are exhaustive over every group; size 4 is exhaustive for
    groups of order <= 8; larger sizes use exhaustive classification over a
    few cyclic groups plus disjoint unions of smaller classified coverings.
    """
    small: dict[str, dict[int, list[Covering]]] = {}
    for name, G in groups(max_order):
        small[name] = {}
        for n in range(1, min(3, max_n) + 1):
            covs = classify_double_covers(G, n)
            small[name][n] = covs
            for c in covs:
                yield name, n, c
        if max_n >= 4 and G.order <= 8:
            for c in classify_double_covers(G, 4):
                yield name, 4, c
        elif max_n >= 4:
            for a in small[name][1]:
                for b in small[name][3]:
                    yield name, 4, disjoint_union_covering(a, b)
        for n in range(5, max_n + 1):
            if name in CYCLIC_FOR_LARGE_N:
                for c in classify_double_covers(G, n):
                    yield name, n, c
            else:
                for a in small[name][n - 3][:6]:
                    for b in small[name][3][:6]:
                        yield name, n, disjoint_union_covering(a, b)
