"""Finite G-sets (thin projective spaces), equivariant maps and isomorphism search."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .group_core import (
    DEFAULT_MAX_ORDER,
    FiniteGroup,
    InvariantError,
    Perm,
    compose,
    enumerate_homs_up_to_conjugacy,
    identity,
    is_bijection,
)


def _check_same_group(X: "GSet", Y: "GSet") -> None:
    if X.group != Y.group:
        raise ValueError("G-sets are over different groups")


@dataclass(frozen=True, eq=False)
class GSet:
    """A right action of ``group`` on the points ``0..size-1``.

    ``action[g]`` is the permutation by which element ``g`` acts.
    """

    group: FiniteGroup
    size: int
    action: tuple[Perm, ...]

    def __post_init__(self):
        G = self.group
        if len(self.action) != G.order:
            raise InvariantError("action must list one permutation per group element")
        if self.action[0] != identity(self.size):
            raise InvariantError("identity must act trivially")
        for g in G.elements:
            if not is_bijection(self.action[g], self.size):
                raise InvariantError(f"element {g} does not act bijectively")
        for g in G.elements:
            for s in G.generators:
                if self.action[G.mult[g][s]] != compose(self.action[g], self.action[s]):
                    raise InvariantError("action is not a homomorphism")

    @classmethod
    def from_images(cls, group: FiniteGroup, size: int, images: Sequence[Sequence[int]]) -> "GSet":
        """Build from the permutations by which the declared generators act."""
        return cls(group, size, group.extend_images([tuple(p) for p in images], size))

    @classmethod
    def trivial(cls, group: FiniteGroup, size: int) -> "GSet":
        return cls(group, size, tuple(identity(size) for _ in group.elements))

    @property
    def gen_images(self) -> tuple[Perm, ...]:
        return tuple(self.action[s] for s in self.group.generators)

    def act(self, x: int, g: int) -> int:
        return self.action[g][x]

    def act_on_subset(self, mask: int, g: int) -> int:
        p = self.action[g]
        out = 0
        for x in range(self.size):
            if mask >> x & 1:
                out |= 1 << p[x]
        return out

    def stabilizer(self, x: int) -> frozenset[int]:
        return frozenset(g for g in self.group.elements if self.action[g][x] == x)

    @cached_property
    def fixed_point_counts(self) -> tuple[int, ...]:
        return tuple(sum(1 for x in range(self.size) if p[x] == x) for p in self.action)

    def __eq__(self, other):
        if not isinstance(other, GSet):
            return NotImplemented
        return self.group == other.group and self.size == other.size and self.action == other.action

    def __hash__(self):
        return hash((self.group, self.size, self.action))


@dataclass(frozen=True)
class GMap:
    """An equivariant map between G-sets over the same group."""

    source: GSet
    target: GSet
    mapping: tuple[int, ...]

    def __post_init__(self):
        _check_same_group(self.source, self.target)
        if len(self.mapping) != self.source.size:
            raise InvariantError("map must be total on the source")
        if any(not 0 <= y < self.target.size for y in self.mapping):
            raise InvariantError("map leaves the target")
        for s in self.source.group.generators:
            ps, pt = self.source.action[s], self.target.action[s]
            for x in range(self.source.size):
                if self.mapping[ps[x]] != pt[self.mapping[x]]:
                    raise InvariantError("map is not equivariant")

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and is_bijection(self.mapping, self.target.size)

    def inverse(self) -> "GMap":
        if not self.is_bijective():
            raise ValueError("map is not invertible")
        inv = [0] * len(self.mapping)
        for x, y in enumerate(self.mapping):
            inv[y] = x
        return GMap(self.target, self.source, tuple(inv))

    def then(self, other: "GMap") -> "GMap":
        return GMap(self.source, other.target, tuple(other.mapping[y] for y in self.mapping))


def product(X: GSet, Y: GSet) -> GSet:
    """Pairs ``(x, y)`` at index ``x * |Y| + y`` with the diagonal action."""
    _check_same_group(X, Y)
    m = Y.size
    action = tuple(
        tuple(px[i // m] * m + py[i % m] for i in range(X.size * m))
        for px, py in zip(X.action, Y.action)
    )
    return GSet(X.group, X.size * m, action)


def disjoint_union(X: GSet, Y: GSet) -> GSet:
    """X's points followed by Y's points shifted by |X|."""
    _check_same_group(X, Y)
    n = X.size
    action = tuple(tuple(px) + tuple(n + y for y in py) for px, py in zip(X.action, Y.action))
    return GSet(X.group, n + Y.size, action)


def _orbits_of(size: int, gens: Sequence[Perm]) -> list[list[int]]:
    seen = [False] * size
    out = []
    for start in range(size):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for p in gens:
                y = p[x]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    queue.append(y)
        out.append(sorted(orbit))
    return out


def orbits(X: GSet) -> list[list[int]]:
    """Orbit partition, blocks sorted by least point."""
    return _orbits_of(X.size, X.gen_images)


def subsets_of_size(n: int, k: int) -> list[int]:
    """All k-subsets of 0..n-1 as bitmasks, in increasing mask order."""
    return [m for m in range(1 << n) if bin(m).count("1") == k]


def grassmannian(X: GSet, k: int) -> GSet:
    """The G-set of k-element subsets of X, indexed in increasing bitmask order."""
    if not 1 <= k <= X.size:
        raise ValueError(f"k must lie in 1..{X.size}")
    masks = subsets_of_size(X.size, k)
    index = {m: i for i, m in enumerate(masks)}
    action = tuple(
        tuple(index[X.act_on_subset(m, g)] for m in masks) for g in X.group.elements
    )
    return GSet(X.group, len(masks), action)


def grassmannian_masks(X: GSet, k: int) -> list[int]:
    return subsets_of_size(X.size, k)


def coset_gset(G: FiniteGroup, subgroup: frozenset[int]) -> GSet:
    """Right cosets ``Hg`` with ``Hg . h = H(gh)``; the coset of H is point 0."""
    cosets: list[frozenset[int]] = []
    which: dict[int, int] = {}
    for g in G.elements:
        if g in which:
            continue
        c = frozenset(G.mult[h][g] for h in subgroup)
        for x in c:
            which[x] = len(cosets)
        cosets.append(c)
    action = tuple(
        tuple(which[G.mult[min(c)][g]] for c in cosets) for g in G.elements
    )
    return GSet(G, len(cosets), action)


# -- isomorphism search ------------------------------------------------------

def structure_isomorphisms(size: int, gens_x: Sequence[Perm], gens_y: Sequence[Perm]) -> Iterator[tuple[int, ...]]:
    """All bijections f with ``f[p[x]] == q[f[x]]`` for paired generators
    ``(p, q)``, yielded in lexicographic order of ``f``.

    Backtracks over orbit-to-orbit matchings: the image of each orbit's least
    point determines the whole orbit.  Candidates are pruned by orbit size.
    """
    orbs_x = _orbits_of(size, gens_x)
    orbs_y = _orbits_of(size, gens_y)
    orbit_of_y = [0] * size
    for i, o in enumerate(orbs_y):
        for y in o:
            orbit_of_y[y] = i
    if sorted(map(len, orbs_x)) != sorted(map(len, orbs_y)):
        return
    # spanning trees of X-orbits as (point, parent, generator) edges
    trees = []
    for o in orbs_x:
        root = o[0]
        edges = []
        seen = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for gi, p in enumerate(gens_x):
                z = p[x]
                if z not in seen:
                    seen.add(z)
                    edges.append((z, x, gi))
                    queue.append(z)
        trees.append(edges)

    f = [-1] * size
    used_orbits = [False] * len(orbs_y)

    def place(i: int, y: int) -> bool:
        root = orbs_x[i][0]
        f[root] = y
        for z, x, gi in trees[i]:
            f[z] = gens_y[gi][f[x]]
        for x in orbs_x[i]:
            for p, q in zip(gens_x, gens_y):
                if f[p[x]] != q[f[x]]:
                    return False
        return True

    def rec(i: int):
        if i == len(orbs_x):
            yield tuple(f)
            return
        size_i = len(orbs_x[i])
        for y in range(size):
            j = orbit_of_y[y]
            if used_orbits[j] or len(orbs_y[j]) != size_i:
                continue
            if place(i, y):
                used_orbits[j] = True
                yield from rec(i + 1)
                used_orbits[j] = False
            for x in orbs_x[i]:
                f[x] = -1

    yield from rec(0)


def isomorphisms(X: GSet, Y: GSet) -> Iterator[GMap]:
    _check_same_group(X, Y)
    if X.size != Y.size or X.fixed_point_counts != Y.fixed_point_counts:
        return
    for f in structure_isomorphisms(X.size, X.gen_images, Y.gen_images):
        yield GMap(X, Y, f)


def is_isomorphic(X: GSet, Y: GSet) -> Optional[GMap]:
    """Lexicographically least equivariant bijection X -> Y, or None."""
    return next(isomorphisms(X, Y), None)


def orbit_signature(X: GSet) -> tuple:
    """Multiset of (orbit size, stabilizer order) pairs -- a necessary invariant."""
    G = X.group
    return tuple(sorted(Counter((len(o), G.order // len(o)) for o in orbits(X)).items()))


def classify_gsets(G: FiniteGroup, n: int, max_order: int = DEFAULT_MAX_ORDER,
                   workers: int = 1) -> list[GSet]:
    """One G-set on n points per isomorphism class."""
    if n < 1:
        raise ValueError("n must be positive")
    homs = enumerate_homs_up_to_conjugacy(G, n, "symmetric", max_order=max_order, workers=workers)
    return [GSet.from_images(G, n, h) for h in homs]
