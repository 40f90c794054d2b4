"""Finite permutation groups and homomorphism enumeration.

Convention used throughout the package: permutations are one-line tuples
``p`` with ``x^p = p[x]``, and groups act on the right, so that
``x^(gh) = (x^g)^h``.  In table form this means

    perm_of[mult[g][h]] == compose(perm_of[g], perm_of[h])

where ``compose(p, q)`` applies ``p`` first and ``q`` second.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

Perm = tuple[int, ...]

DEFAULT_MAX_ORDER = 48
CLOSURE_LIMIT = 1000


class InvariantError(ValueError):
    """A structure violates one of its defining invariants."""


class SizeLimitError(ValueError):
    """An input exceeds a configured size bound."""


# -- permutation helpers -----------------------------------------------------

def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """``p`` then ``q``."""
    return tuple(map(q.__getitem__, p))


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_bijection(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def perm_order(p: Perm) -> int:
    order = 1
    for c in cycles(p):
        order = order * len(c) // _gcd(order, len(c))
    return order


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its least point, sorted."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def sign(p: Perm) -> int:
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def format_cycles(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse cycle notation such as ``(0 1)(2 3)`` into a permutation of 0..n-1."""
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    img = list(range(n))
    used: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        parts = body.replace(",", " ").split()
        if not parts:
            continue
        pts = [int(t) for t in parts]
        for x in pts:
            if not 0 <= x < n:
                raise ValueError(f"point {x} outside 0..{n - 1}")
            if x in used:
                raise ValueError(f"point {x} appears twice in {text!r}")
            used.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


# -- groups ------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A permutation group with explicit multiplication table.

    Elements are the integers ``0..order-1`` in breadth-first discovery
    order from the identity (element 0).  ``gen_perms`` keeps the generator
    list exactly as declared; ``generators`` gives their element ids.
    """

    degree: int
    gen_perms: tuple[Perm, ...]
    perm_of: tuple[Perm, ...]
    mult: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    generators: tuple[int, ...]
    # Schreier tree: element x = parent[x] * gens[gen_index[x]] (x != 0)
    parent: tuple[int, ...] = field(repr=False)
    gen_index: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.perm_of)

    @property
    def elements(self) -> range:
        return range(self.order)

    def index_of(self, p: Perm) -> int:
        return self._lookup[p]

    @property
    def _lookup(self) -> dict[Perm, int]:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {p: i for i, p in enumerate(self.perm_of)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def _key(self):
        return (self.degree, self.gen_perms)

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mult[x][g]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.mult[a][b] == self.mult[b][a]
                   for a in self.elements for b in self.elements)

    def subgroup_closure(self, elems: Iterable[int]) -> frozenset[int]:
        gens = list(dict.fromkeys(elems))
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.mult[x][s]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def extend_images(self, images: Sequence[Perm], degree: int) -> tuple[Perm, ...]:
        """Extend generator images (permutations of ``0..degree-1``) to a
        homomorphism on all elements.

        Raises InvariantError if the images do not respect the relations of
        the group.
        """
        if len(images) != len(self.gen_perms):
            raise InvariantError(
                f"expected {len(self.gen_perms)} generator images, got {len(images)}")
        images = [tuple(p) for p in images]
        for p in images:
            if not is_bijection(p, degree):
                raise InvariantError(f"{list(p)} is not a permutation of 0..{degree - 1}")
        phi = _extend(self, images, len(images), degree)
        if phi is None:
            raise InvariantError("generator images do not define a homomorphism")
        return phi


def _extend(G: FiniteGroup, images: Sequence[Perm], k: int, m: int) -> Optional[tuple[Perm, ...]]:
    """Extend images of the first ``k`` generators over the subgroup they
    generate; return None if inconsistent.  Elements outside that subgroup
    map to None in the returned tuple (only when k < #generators)."""
    tree = _subgroup_tree(G, k)
    phi: list[Optional[Perm]] = [None] * G.order
    phi[0] = identity(m)
    for x, par, gi in tree:
        phi[x] = compose(phi[par], images[gi])
    for x, _, _ in itertools.chain([(0, 0, 0)], tree):
        px = phi[x]
        for gi in range(k):
            y = G.mult[x][G.generators[gi]]
            if phi[y] != compose(px, images[gi]):
                return None
    return tuple(phi)


@lru_cache(maxsize=None)
def _subgroup_tree_cached(G: FiniteGroup, k: int) -> tuple[tuple[int, int, int], ...]:
    gens = G.generators[:k]
    seen = {0}
    queue = deque([0])
    edges = []
    while queue:
        x = queue.popleft()
        for gi, s in enumerate(gens):
            y = G.mult[x][s]
            if y not in seen:
                seen.add(y)
                edges.append((y, x, gi))
                queue.append(y)
    return tuple(edges)


def _subgroup_tree(G: FiniteGroup, k: int):
    return _subgroup_tree_cached(G, k)


def group_from_generators(domain_size: int, gens: Sequence[Sequence[int]],
                          limit: int = CLOSURE_LIMIT) -> FiniteGroup:
    """Close a list of permutations of ``0..domain_size-1`` into a group.

    Elements are numbered in breadth-first order from the identity,
    multiplying on the right by the generators in the order given.
    """
    if domain_size <= 0:
        raise ValueError("domain_size must be positive")
    gen_perms = tuple(tuple(g) for g in gens)
    for g in gen_perms:
        if not is_bijection(g, domain_size):
            raise ValueError(f"{list(g)} is not a bijection of 0..{domain_size - 1}")
    e = identity(domain_size)
    perms = [e]
    index = {e: 0}
    parent = [0]
    gen_index = [-1]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for gi, s in enumerate(gen_perms):
            p = compose(perms[x], s)
            if p not in index:
                if len(perms) >= limit:
                    raise SizeLimitError(f"group closure exceeds {limit} elements")
                index[p] = len(perms)
                perms.append(p)
                parent.append(x)
                gen_index.append(gi)
                queue.append(index[p])
    mult = tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
    inv = tuple(index[inverse(p)] for p in perms)
    return FiniteGroup(
        degree=domain_size,
        gen_perms=gen_perms,
        perm_of=tuple(perms),
        mult=mult,
        inv=inv,
        generators=tuple(index[g] for g in gen_perms),
        parent=tuple(parent),
        gen_index=tuple(gen_index),
    )


def conjugacy_classes(G: FiniteGroup) -> list[list[int]]:
    """Orbits of ``x -> g^-1 x g``, each sorted, blocks ordered by least element."""
    seen = [False] * G.order
    blocks = []
    for x in G.elements:
        if seen[x]:
            continue
        block = set()
        for g in G.elements:
            block.add(G.mult[G.mult[G.inv[g]][x]][g])
        for y in block:
            seen[y] = True
        blocks.append(sorted(block))
    return blocks


# -- target groups for homomorphism enumeration ------------------------------

@lru_cache(maxsize=None)
def symmetric_elements(n: int) -> tuple[Perm, ...]:
    return tuple(itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def hyperoctahedral_elements(n: int) -> tuple[Perm, ...]:
    """Permutations of the 2n points {a_i = 2i, b_i = 2i+1} commuting with
    the pairing a_i <-> b_i, in lexicographic order."""
    out = []
    for s in itertools.permutations(range(n)):
        for flips in itertools.product((0, 1), repeat=n):
            img = [0] * (2 * n)
            for i in range(n):
                img[2 * i] = 2 * s[i] + flips[i]
                img[2 * i + 1] = 2 * s[i] + 1 - flips[i]
            out.append(tuple(img))
    out.sort()
    return tuple(out)


def pairing(n: int) -> Perm:
    """The fixed-point-free involution a_i <-> b_i on 2n points."""
    return tuple(i ^ 1 for i in range(2 * n))


def is_hyperoctahedral(p: Perm) -> bool:
    if len(p) % 2:
        return False
    sig = pairing(len(p) // 2)
    return compose(p, sig) == compose(sig, p)


def target_elements(n: int, target: str) -> tuple[Perm, ...]:
    if target == "symmetric":
        return symmetric_elements(n)
    if target == "hyperoctahedral":
        return hyperoctahedral_elements(n)
    raise ValueError(f"unknown target {target!r}")


@lru_cache(maxsize=None)
def _class_minima(n: int, target: str) -> tuple[Perm, ...]:
    """Lexicographically least element of every conjugacy class of the target."""
    elems = target_elements(n, target)
    invs = [inverse(t) for t in elems]
    seen: set[Perm] = set()
    minima = []
    for p in elems:
        if p in seen:
            continue
        minima.append(p)
        for t, ti in zip(elems, invs):
            seen.add(compose(compose(ti, p), t))
    return tuple(minima)


def conjugate_hom(images: Sequence[Perm], t: Perm, t_inv: Perm) -> tuple[Perm, ...]:
    return tuple(compose(compose(t_inv, p), t) for p in images)


def enumerate_homs_up_to_conjugacy(G: FiniteGroup, n: int, target: str = "symmetric",
                                   max_order: int = DEFAULT_MAX_ORDER,
                                   workers: int = 1) -> list[tuple[Perm, ...]]:
    """One representative per target-conjugacy class of homomorphisms G -> target.

    ``target`` is ``"symmetric"`` (S_n on n points) or ``"hyperoctahedral"``
    (S_2^n x| S_n on 2n points, see :func:`hyperoctahedral_elements`).  A
    homomorphism is the tuple of images of ``G.gen_perms``.  Each returned
    representative is the lexicographically least member of its class and
    the list is sorted.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    if G.order > max_order:
        raise SizeLimitError(f"group order {G.order} exceeds limit {max_order}")
    elems = target_elements(n, target)
    k = len(G.gen_perms)
    if k == 0:
        return [()]
    m = len(elems[0])
    gen_orders = [G.element_order(s) for s in G.generators]
    by_order: dict[int, list[Perm]] = {}
    for p in elems:
        by_order.setdefault(perm_order(p), []).append(p)

    def allowed(gi: int) -> list[Perm]:
        return [p for d, ps in sorted(by_order.items()) if gen_orders[gi] % d == 0 for p in ps]

    candidates = [sorted(allowed(gi)) for gi in range(k)]
    # the lex-least member of a class has a class-minimal first image
    minima = set(_class_minima(n, target))
    firsts = [p for p in candidates[0] if p in minima]

    def search(first: Perm) -> list[tuple[Perm, ...]]:
        found = []
        stack: list[Perm] = [first]

        def rec(level: int):
            if _extend(G, stack, level, m) is None:
                return
            if level == k:
                found.append(tuple(stack))
                return
            for p in candidates[level]:
                stack.append(p)
                rec(level + 1)
                stack.pop()

        rec(1)
        return found

    if workers > 1 and len(firsts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(search, firsts))
    else:
        chunks = [search(p) for p in firsts]
    homs = sorted(h for chunk in chunks for h in chunk)

    invs = [inverse(t) for t in elems]
    seen: set[tuple[Perm, ...]] = set()
    reps = []
    for h in homs:
        if h in seen:
            continue
        reps.append(h)
        for t, ti in zip(elems, invs):
            seen.add(conjugate_hom(h, t, ti))
    return reps
