"""A small library of concrete permutation groups used as stand-ins for a
Galois group acting through a finite quotient."""

from __future__ import annotations

from typing import Callable, Hashable, Sequence

from .group_core import FiniteGroup, group_from_generators


def _cycle(n: int, offset: int = 0, degree: int | None = None) -> tuple[int, ...]:
    degree = degree if degree is not None else n + offset
    img = list(range(degree))
    for i in range(n):
        img[offset + i] = offset + (i + 1) % n
    return tuple(img)


def trivial() -> FiniteGroup:
    return group_from_generators(1, [])


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return trivial()
    return group_from_generators(n, [_cycle(n)])


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return trivial()
    if n == 2:
        return cyclic(2)
    swap = (1, 0) + tuple(range(2, n))
    return group_from_generators(n, [swap, _cycle(n)])


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return trivial()
    gens = []
    for k in range(2, n):
        # 3-cycles (0 1 k)
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(tuple(img))
    return group_from_generators(n, gens[:2] if n > 3 else gens)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    if n == 2:
        return direct_product(cyclic(2), cyclic(2))
    reflect = tuple((-i) % n for i in range(n))
    return group_from_generators(n, [_cycle(n), reflect])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H acting on the disjoint union of their domains."""
    d, e = G.degree, H.degree
    gens = [tuple(g) + tuple(range(d, d + e)) for g in G.gen_perms]
    gens += [tuple(range(d)) + tuple(d + x for x in h) for h in H.gen_perms]
    return group_from_generators(d + e, gens)


def from_multiplication(elements: Sequence[Hashable], mul: Callable, gens: Sequence[Hashable]) -> FiniteGroup:
    """Right regular representation of an abstractly given group."""
    idx = {x: i for i, x in enumerate(elements)}
    perms = [tuple(idx[mul(x, s)] for x in elements) for s in gens]
    return group_from_generators(len(elements), perms)


def quaternion() -> FiniteGroup:
    """Q8 in its regular representation; elements are (sign, unit)."""
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mul(a, b):
        s, u = table[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    elements = [(s, u) for s in (1, -1) for u in "1ijk"]
    return from_multiplication(elements, mul, [(1, "i"), (1, "j")])


def dicyclic3() -> FiniteGroup:
    """Dic3 = <a, x | a^6, x^2 = a^3, x^-1 a x = a^-1>, order 12."""
    # element a^k x^j stored as (k, j)
    def mul(p, q):
        k1, j1 = p
        k2, j2 = q
        k2 = k2 if j1 == 0 else -k2
        k = k1 + k2
        j = j1 + j2
        if j == 2:
            k, j = k + 3, 0
        return (k % 6, j)

    elements = [(k, j) for j in (0, 1) for k in range(6)]
    return from_multiplication(elements, mul, [(1, 0), (0, 1)])


def library(max_order: int = 12) -> list[tuple[str, FiniteGroup]]:
    """Every group of order <= 12 up to isomorphism, with a short name."""
    c = cyclic
    entries = [
        ("C1", trivial),
        ("C2", lambda: c(2)),
        ("C3", lambda: c(3)),
        ("C4", lambda: c(4)),
        ("C2xC2", lambda: direct_product(c(2), c(2))),
        ("C5", lambda: c(5)),
        ("C6", lambda: c(6)),
        ("S3", lambda: symmetric(3)),
        ("C7", lambda: c(7)),
        ("C8", lambda: c(8)),
        ("C2xC4", lambda: direct_product(c(2), c(4))),
        ("C2xC2xC2", lambda: direct_product(direct_product(c(2), c(2)), c(2))),
        ("D4", lambda: dihedral(4)),
        ("Q8", quaternion),
        ("C9", lambda: c(9)),
        ("C3xC3", lambda: direct_product(c(3), c(3))),
        ("C10", lambda: c(10)),
        ("D5", lambda: dihedral(5)),
        ("C11", lambda: c(11)),
        ("C12", lambda: c(12)),
        ("C2xC6", lambda: direct_product(c(2), c(6))),
        ("D6", lambda: dihedral(6)),
        ("A4", lambda: alternating(4)),
        ("Dic3", dicyclic3),
    ]
    out = []
    for name, build in entries:
        G = build()
        if G.order <= max_order:
            out.append((name, G))
    return out
