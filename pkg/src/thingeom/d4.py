"""The A3 = D3 equivalence and triality on oriented double coverings.

Triality orientation convention
-------------------------------
For an oriented covering ``Y -> Y0`` with ``|Y0| = 4``, let ``C_i`` be the
class-``i`` sections.  Each point ``y`` of ``Y`` picks out the set
``{w in C_i : y in w}``, which meets every complementary pair of ``C_i``
once, i.e. it is a section of ``C_i -> C_i/complement``.  These "vector"
sections all fall into one discriminant class of the new covering.  The
shipped convention ("standard") gives the vector class label ``3 - i``
in ``C_i^+``; the alternative ("naive", label ``i``) is kept for debugging
and does not have period three.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .covering import (
    CoveringIso,
    Involution,
    OrientedCovering,
    clifford_set,
    covering_from_involution,
    is_oriented_isomorphism,
    oriented_isomorphism,
    section_image,
)
from .group_core import InvariantError
from .gset import GSet, grassmannian, subsets_of_size

CONVENTIONS = {
    "standard": lambda which: 3 - which,
    "naive": lambda which: which,
}


@dataclass(frozen=True, eq=False)
class HalfCliffordSet:
    parent: OrientedCovering
    which: int
    section_indices: tuple[int, ...]
    carrier: GSet
    complement_restriction: Optional[Involution]

    @property
    def section_masks(self) -> tuple[int, ...]:
        secs = self.parent.clifford.sections
        return tuple(secs[i] for i in self.section_indices)


def half_clifford(oc: OrientedCovering, which: int) -> HalfCliffordSet:
    """The sections labelled ``which`` with the restricted action."""
    if which not in (1, 2):
        raise ValueError("which must be 1 or 2")
    C = oc.clifford
    idx = tuple(i for i in range(len(C)) if oc.label_of(i) == which)
    pos = {i: k for k, i in enumerate(idx)}
    action = tuple(tuple(pos[C.gset.action[g][i]] for i in idx) for g in C.gset.group.elements)
    carrier = GSet(C.gset.group, len(idx), action)
    comp = None
    if oc.n % 2 == 0:
        comp = Involution(carrier, tuple(pos[C.complement[i]] for i in idx))
    return HalfCliffordSet(oc, which, idx, carrier, comp)


# -- A3 = D3 -----------------------------------------------------------------

def gr1(X: GSet) -> OrientedCovering:
    """2-subsets of a 4-element G-set, paired with their complements.

    Class 1 consists of the sections whose three 2-subsets share a point.
    """
    if X.size != 4:
        raise ValueError(f"gr1 needs a 4-element G-set, got {X.size}")
    Y = grassmannian(X, 2)
    masks = subsets_of_size(4, 2)
    index = {m: i for i, m in enumerate(masks)}
    sigma = tuple(index[m ^ 0b1111] for m in masks)
    cov = covering_from_involution(Involution(Y, sigma))
    C = clifford_set(cov)
    anchor = [masks[y] for y in C.points(0)]
    common = anchor[0] & anchor[1] & anchor[2]
    return OrientedCovering(cov, 1 if common else 2)


def c1_inverse_gr1(oc: OrientedCovering) -> GSet:
    """Class-1 sections of an oriented 6/3 covering as a 4-element G-set."""
    if oc.n != 3:
        raise ValueError(f"needs base size 3, got {oc.n}")
    return half_clifford(oc, 1).carrier


def point_to_subset_map(X: GSet) -> tuple[int, ...]:
    """The explicit bijection X -> C_1(gr1(X)): x -> {pairs containing x}."""
    oc = gr1(X)
    half = half_clifford(oc, 1)
    masks = subsets_of_size(4, 2)
    out = []
    for x in range(4):
        chosen = 0
        for i, m in enumerate(masks):
            if m >> x & 1:
                chosen |= 1 << i
        out.append(half.section_masks.index(chosen))
    return tuple(out)


# -- triality ----------------------------------------------------------------

def triality_c_plus(obj: OrientedCovering, which: int = 1, convention: str = "standard") -> OrientedCovering:
    """The oriented covering C_which^+(obj) on the class-``which`` sections."""
    if obj.n != 4:
        raise ValueError(f"triality needs base size 4, got {obj.n}")
    half = half_clifford(obj, which)
    cov = covering_from_involution(half.complement_restriction)
    C = clifford_set(cov)
    if not C.is_orientable:
        raise InvariantError("triality output is not orientable")
    vclass = vector_class(obj, half, C)
    label = CONVENTIONS[convention](which)
    anchor_label = label if vclass == 0 else 3 - label
    return OrientedCovering(cov, anchor_label)


def triality_c1_plus(obj: OrientedCovering, convention: str = "standard") -> OrientedCovering:
    return triality_c_plus(obj, 1, convention)


def triality_c2_plus(obj: OrientedCovering, convention: str = "standard") -> OrientedCovering:
    return triality_c_plus(obj, 2, convention)


def vector_sections(obj: OrientedCovering, half: HalfCliffordSet) -> list[int]:
    """For each point y of the total space, the carrier-mask of {w in half : y in w}."""
    out = []
    for y in range(obj.covering.total.size):
        m = 0
        for k, w in enumerate(half.section_masks):
            if w >> y & 1:
                m |= 1 << k
        out.append(m)
    return out


def vector_class(obj: OrientedCovering, half: HalfCliffordSet, C) -> int:
    classes = {C.class_of[C.index_of_mask(m)] for m in vector_sections(obj, half)}
    if len(classes) != 1:
        raise InvariantError("vector sections are split between classes")
    return classes.pop()


@dataclass(frozen=True)
class TrialityOrbit:
    objects: tuple[OrientedCovering, ...]
    orbit_length: int
    # witnesses[k]: isomorphism objects[k] -> objects[0], if one exists
    witnesses: tuple[Optional[CoveringIso], ...]


def triality_orbit(obj: OrientedCovering, steps: int, convention: str = "standard") -> TrialityOrbit:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    objs = [obj]
    for _ in range(steps):
        objs.append(triality_c1_plus(objs[-1], convention))
    witnesses = tuple(oriented_isomorphism(o, obj) for o in objs)
    first = objs[1] if steps >= 1 else triality_c1_plus(obj, convention)
    length = 1 if oriented_isomorphism(first, obj) is not None else 3
    return TrialityOrbit(tuple(objs), length, witnesses)


def induced_half_map(f: Sequence[int], a: OrientedCovering, b: OrientedCovering, which: int = 1) -> tuple[int, ...]:
    """The map on class-``which`` carriers induced by an oriented isomorphism a -> b."""
    if not is_oriented_isomorphism(a, b, f):
        raise ValueError("f is not an isomorphism of oriented coverings")
    ha, hb = half_clifford(a, which), half_clifford(b, which)
    pos = {m: k for k, m in enumerate(hb.section_masks)}
    return tuple(pos[section_image(f, m)] for m in ha.section_masks)
