"""Double coverings of G-sets, their Clifford sets, discriminants and orientations.

Sections of a degree-2 covering are encoded relative to a choice of one
representative point per fiber (by default the least point of the fiber):
section ``i`` picks the non-representative point exactly on the fibers whose
bit is set in ``i``.  Complementation is then ``i ^ (2**n - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .group_core import InvariantError, Perm, compose, sign
from .gset import GMap, GSet, _check_same_group, disjoint_union, product, structure_isomorphisms


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, eq=False)
class Covering:
    """An equivariant surjection ``pi: total -> base`` with constant fiber size."""

    total: GSet
    base: GSet
    pi: tuple[int, ...]

    def __post_init__(self):
        _check_same_group(self.total, self.base)
        if self.base.size == 0:
            raise InvariantError("covering of the empty G-set")
        GMap(self.total, self.base, self.pi)  # equivariance
        sizes = [0] * self.base.size
        for b in self.pi:
            sizes[b] += 1
        if min(sizes) == 0:
            raise InvariantError("pi is not surjective")
        if len(set(sizes)) != 1:
            raise InvariantError(f"fibers have unequal sizes {sizes}")

    @property
    def group(self):
        return self.total.group

    @cached_property
    def clifford(self) -> "CliffordSet":
        """Clifford set with the default representatives, computed once."""
        return clifford_set(self)

    @property
    def degree(self) -> int:
        return self.total.size // self.base.size

    @property
    def n(self) -> int:
        return self.base.size

    @cached_property
    def fibers(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.base.size)]
        for y, b in enumerate(self.pi):
            out[b].append(y)
        return tuple(tuple(f) for f in out)

    @classmethod
    def from_total(cls, total: GSet, pi: Sequence[int]) -> "Covering":
        """Induce the base action from ``pi``; raises if it is not well defined."""
        pi = tuple(pi)
        if len(pi) != total.size:
            raise InvariantError("pi must be defined on every point of the total space")
        m = max(pi) + 1 if pi else 0
        if sorted(set(pi)) != list(range(m)):
            raise InvariantError("pi must be onto 0..max")
        images = []
        for p in total.gen_images:
            img: list[Optional[int]] = [None] * m
            for y in range(total.size):
                b, c = pi[y], pi[p[y]]
                if img[b] is None:
                    img[b] = c
                elif img[b] != c:
                    raise InvariantError("pi does not induce a well-defined base action")
            images.append(tuple(img))
        base = GSet.from_images(total.group, m, images)
        return cls(total, base, pi)


@dataclass(frozen=True, eq=False)
class Involution:
    """A fixed-point-free equivariant involution of a G-set."""

    space: GSet
    sigma: Perm

    def __post_init__(self):
        s = self.sigma
        if sorted(s) != list(range(self.space.size)):
            raise InvariantError("sigma is not a permutation")
        if any(s[x] == x or s[s[x]] != x for x in range(self.space.size)):
            raise InvariantError("sigma must have order 2 and no fixed points")
        for p in self.space.gen_images:
            if compose(p, s) != compose(s, p):
                raise InvariantError("sigma does not commute with the group action")


def covering_from_involution(inv: Involution) -> Covering:
    """Quotient by sigma; base points are the pairs {y, sigma(y)} ordered by least point."""
    Y = inv.space
    pi = [-1] * Y.size
    k = 0
    for y in range(Y.size):
        if pi[y] < 0:
            pi[y] = pi[inv.sigma[y]] = k
            k += 1
    return Covering.from_total(Y, pi)


def involution_from_covering(cov: Covering) -> Involution:
    if cov.degree != 2:
        raise ValueError(f"involution needs a degree-2 covering, got degree {cov.degree}")
    sigma = [0] * cov.total.size
    for a, b in cov.fibers:
        sigma[a], sigma[b] = b, a
    return Involution(cov.total, tuple(sigma))


def disjoint_union_covering(c1: Covering, c2: Covering) -> Covering:
    total = disjoint_union(c1.total, c2.total)
    pi = c1.pi + tuple(c1.n + b for b in c2.pi)
    return Covering(total, disjoint_union(c1.base, c2.base), pi)


# -- Clifford sets -----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CliffordSet:
    """The G-set of sections of a double covering.

    ``sections[i]`` is the bitmask (over points of the total space) of
    section ``i``.  ``class_of`` is 0 on the class of section 0 and 1 on the
    other; ``delta_action[g]`` is the permutation of {0, 1} induced by ``g``.
    """

    parent: Covering
    representatives: tuple[int, ...]
    sections: tuple[int, ...]
    gset: GSet
    complement: Perm
    class_of: tuple[int, ...]
    delta_action: tuple[Perm, ...]

    @property
    def n(self) -> int:
        return self.parent.n

    def __len__(self) -> int:
        return len(self.sections)

    def points(self, i: int) -> tuple[int, ...]:
        m = self.sections[i]
        return tuple(y for y in range(self.parent.total.size) if m >> y & 1)

    def index_of_mask(self, mask: int) -> int:
        return self._mask_index[mask]

    @cached_property
    def _mask_index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.sections)}

    @property
    def classes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        c0 = tuple(i for i, c in enumerate(self.class_of) if c == 0)
        c1 = tuple(i for i, c in enumerate(self.class_of) if c == 1)
        return c0, c1

    @property
    def complement_involution(self) -> Involution:
        return Involution(self.gset, self.complement)

    def same_class(self, i: int, j: int) -> bool:
        """Parity rule: |w_i & w_j| == n (mod 2)."""
        return (_popcount(self.sections[i] & self.sections[j]) - self.n) % 2 == 0

    def swaps_classes(self, g: int) -> bool:
        return self.delta_action[g] != (0, 1)

    @property
    def is_orientable(self) -> bool:
        return all(d == (0, 1) for d in self.delta_action)


def _delta(class_of, p) -> Perm:
    c = class_of[p[0]]
    return (c, 1 - c)


def clifford_set(cov: Covering, representatives: Optional[Sequence[int]] = None) -> CliffordSet:
    """Enumerate the 2**n sections of a double covering with induced structure.

    ``representatives`` optionally overrides the per-fiber representative
    (default: least point of each fiber); it changes the indexing and the
    anchor, never the partition into classes.
    """
    if cov.degree != 2:
        raise ValueError(f"Clifford set needs a degree-2 covering, got degree {cov.degree}")
    n = cov.n
    if representatives is None:
        reps = tuple(min(f) for f in cov.fibers)
    else:
        reps = tuple(representatives)
        if len(reps) != n or any(cov.pi[r] != b for b, r in enumerate(reps)):
            raise ValueError("need one representative inside each fiber")
    others = tuple(a if a != r else b for (a, b), r in zip(cov.fibers, reps))
    sections = []
    for i in range(1 << n):
        m = 0
        for j in range(n):
            m |= 1 << (others[j] if i >> j & 1 else reps[j])
        sections.append(m)
    sections = tuple(sections)
    # g sends section i to base[g] ^ (bits of i moved fiber to fiber)
    fiber_of = [0] * cov.total.size
    is_other = [0] * cov.total.size
    for j, (r, o) in enumerate(zip(reps, others)):
        fiber_of[r] = fiber_of[o] = j
        is_other[o] = 1
    Y = cov.total
    G = Y.group
    gen_images = []
    for p in Y.gen_images:
        img = [0] * (1 << n)
        img[0] = sum(is_other[p[r]] << fiber_of[p[r]] for r in reps)
        for i in range(1, 1 << n):
            low = i & -i
            img[i] = img[i ^ low] ^ (1 << fiber_of[p[reps[low.bit_length() - 1]]])
        gen_images.append(tuple(img))
    gset = GSet.from_images(G, len(sections), gen_images)
    action = gset.action
    full = (1 << n) - 1
    complement = tuple(i ^ full for i in range(len(sections)))
    anchor = sections[0]
    class_of = tuple(0 if (_popcount(m & anchor) - n) % 2 == 0 else 1 for m in sections)
    # generators decide whether the classes are respected; delta is then a homomorphism
    for s in G.generators:
        d = _delta(class_of, action[s])
        if any(class_of[action[s][i]] != d[class_of[i]] for i in range(len(sections))):
            raise InvariantError("group action does not respect the section classes")
    delta = [_delta(class_of, action[g]) for g in G.elements]
    return CliffordSet(cov, reps, sections, gset, complement, class_of, tuple(delta))


@dataclass(frozen=True)
class Discriminant:
    blocks: tuple[tuple[int, ...], tuple[int, ...]]
    delta_action: tuple[Perm, ...]

    @property
    def swapping_elements(self) -> tuple[int, ...]:
        return tuple(g for g, d in enumerate(self.delta_action) if d != (0, 1))


def discriminant(C: CliffordSet) -> Discriminant:
    """Two-block partition of the sections and the induced action on it.

    Each group element swaps the two blocks exactly when it acts on the
    total space as an odd permutation.
    """
    return Discriminant(C.classes, C.delta_action)


def sign_law_holds(C: CliffordSet) -> bool:
    Y = C.parent.total
    return all(C.swaps_classes(g) == (sign(Y.action[g]) == -1) for g in Y.group.elements)


def parity_relation_is_partition(C: CliffordSet) -> bool:
    """Check that the parity rule is an equivalence with two blocks of size 2**(n-1)."""
    N = len(C)
    for i in range(N):
        for j in range(N):
            if C.same_class(i, j) != (C.class_of[i] == C.class_of[j]):
                return False
    c0, c1 = C.classes
    return len(c0) == len(c1) == N // 2


# -- orientations ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OrientedCovering:
    """A double covering whose group action fixes each discriminant class,
    together with a labelling of the classes by 1 and 2.

    ``anchor_label`` is the label of the class containing section 0.
    """

    covering: Covering
    anchor_label: int = 1

    def __post_init__(self):
        if self.anchor_label not in (1, 2):
            raise ValueError("orientation label must be 1 or 2")
        if not self.clifford.is_orientable:
            raise InvariantError("covering is not orientable")

    @cached_property
    def clifford(self) -> CliffordSet:
        return clifford_set(self.covering)

    @property
    def n(self) -> int:
        return self.covering.n

    def label_of(self, i: int) -> int:
        return self.anchor_label if self.clifford.class_of[i] == 0 else 3 - self.anchor_label

    def label_of_mask(self, mask: int) -> int:
        return self.label_of(self.clifford.index_of_mask(mask))

    def flipped(self) -> "OrientedCovering":
        return OrientedCovering(self.covering, 3 - self.anchor_label)


def orient(cov: Covering, label: Optional[int] = None) -> Optional[OrientedCovering]:
    """Orientation putting section 0 in class ``label`` (default 1), or None
    when some group element exchanges the classes."""
    if cov.degree != 2:
        raise ValueError("orientation needs a degree-2 covering")
    if not clifford_set(cov).is_orientable:
        return None
    return OrientedCovering(cov, 1 if label is None else label)


# -- products ----------------------------------------------------------------

def clifford_product(cov1: Covering, cov2: Covering) -> tuple[GMap, CliffordSet]:
    """:func:`clifford_product_iso` together with the Clifford set of the union."""
    _check_same_group(cov1.total, cov2.total)
    C1, C2 = cov1.clifford, cov2.clifford
    C = disjoint_union_covering(cov1, cov2).clifford
    shift = cov1.total.size
    mapping = tuple(
        C.index_of_mask(m1 | (m2 << shift)) for m1 in C1.sections for m2 in C2.sections
    )
    return GMap(product(C1.gset, C2.gset), C.gset, mapping), C


def clifford_product_iso(cov1: Covering, cov2: Covering) -> GMap:
    """The bijection C(Y/Y0) x C(Z/Z0) -> C(Y+Z / Y0+Z0), (w, w') -> w + w'."""
    return clifford_product(cov1, cov2)[0]


# -- isomorphisms of coverings -----------------------------------------------

@dataclass(frozen=True)
class CoveringIso:
    """Equivariant bijections of total spaces and bases commuting with pi."""

    total_map: tuple[int, ...]
    base_map: tuple[int, ...]


def _base_map(a: Covering, b: Covering, f: Sequence[int]) -> tuple[int, ...]:
    out = [0] * a.n
    for y, x in enumerate(a.pi):
        out[x] = b.pi[f[y]]
    return tuple(out)


def covering_isomorphisms(a: Covering, b: Covering) -> Iterator[CoveringIso]:
    """Isomorphisms of double coverings, lexicographic in the total map."""
    _check_same_group(a.total, b.total)
    if a.total.size != b.total.size or a.n != b.n:
        return
    if a.total.fixed_point_counts != b.total.fixed_point_counts:
        return
    sa = involution_from_covering(a).sigma
    sb = involution_from_covering(b).sigma
    gx = a.total.gen_images + (sa,)
    gy = b.total.gen_images + (sb,)
    for f in structure_isomorphisms(a.total.size, gx, gy):
        yield CoveringIso(f, _base_map(a, b, f))


def covering_isomorphism(a: Covering, b: Covering) -> Optional[CoveringIso]:
    return next(covering_isomorphisms(a, b), None)


def section_image(f: Sequence[int], mask: int) -> int:
    out = 0
    y = 0
    while mask:
        if mask & 1:
            out |= 1 << f[y]
        mask >>= 1
        y += 1
    return out


def preserves_orientation(a: OrientedCovering, b: OrientedCovering, f: Sequence[int]) -> bool:
    m = a.clifford.sections[0]
    return a.label_of(0) == b.label_of_mask(section_image(f, m))


def oriented_isomorphism(a: OrientedCovering, b: OrientedCovering) -> Optional[CoveringIso]:
    """Least covering isomorphism that carries the labelling of a to that of b."""
    for iso in covering_isomorphisms(a.covering, b.covering):
        if preserves_orientation(a, b, iso.total_map):
            return iso
    return None


def is_oriented_isomorphism(a: OrientedCovering, b: OrientedCovering, f: Sequence[int]) -> bool:
    """Check a candidate total-space map directly."""
    ca, cb = a.covering, b.covering
    if ca.group != cb.group or sorted(f) != list(range(cb.total.size)) or len(f) != ca.total.size:
        return False
    try:
        GMap(ca.total, cb.total, tuple(f))
    except InvariantError:
        return False
    sa = involution_from_covering(ca).sigma
    sb = involution_from_covering(cb).sigma
    if any(f[sa[y]] != sb[f[y]] for y in range(len(f))):
        return False
    return preserves_orientation(a, b, f)
