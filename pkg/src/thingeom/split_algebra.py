"""Split etale algebras as rational functions on finite sets, and the Clifford
algebra of a split quadratic extension realised inside a tensor power.

For a trivial-group double covering ``pi: Y -> Y0`` with ``|Y0| = n`` the
algebra ``L`` is functions on ``Y`` and ``L0`` functions on ``Y0``.  The
n-th tensor power of ``L`` is functions on ``Y^n`` (coordinate vectors over
tuples in ``itertools.product`` order) with the pointwise product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Sequence

import sympy

from .covering import Covering, clifford_product_iso, clifford_set, disjoint_union_covering
from .group_core import SizeLimitError

MAX_TENSOR_N = 4

Vec = tuple[Fraction, ...]


def _vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def _fmt(v: Sequence) -> list[str]:
    return [str(Fraction(x)) for x in v]


@dataclass(frozen=True)
class SplitEtaleAlgebra:
    """Rational-valued functions on ``0..size-1`` with pointwise operations."""

    size: int

    def one(self) -> Vec:
        return (Fraction(1),) * self.size

    def zero(self) -> Vec:
        return (Fraction(0),) * self.size

    def indicator(self, i: int) -> Vec:
        return tuple(Fraction(int(j == i)) for j in range(self.size))

    def idempotents(self) -> list[Vec]:
        return [self.indicator(i) for i in range(self.size)]

    def mul(self, a: Sequence, b: Sequence) -> Vec:
        return tuple(Fraction(x) * y for x, y in zip(a, b))

    def add(self, a: Sequence, b: Sequence) -> Vec:
        return tuple(Fraction(x) + y for x, y in zip(a, b))

    def trace(self, a: Sequence) -> Fraction:
        return sum((Fraction(x) for x in a), Fraction(0))


def tensor_indices(m: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(m), repeat=n))


def fat_diagonal_idempotent(m0: int, n: int) -> tuple[int, ...]:
    """0/1 function on ``range(m0)**n``: 1 exactly on tuples with distinct entries."""
    if n != m0:
        raise ValueError(f"tensor power {n} must equal the base size {m0}")
    if n > MAX_TENSOR_N:
        raise SizeLimitError(f"tensor powers are materialised only for n <= {MAX_TENSOR_N}")
    return tuple(int(len(set(t)) == n) for t in tensor_indices(m0, n))


# -- linear algebra helpers (exact, via sympy) -------------------------------

def _matrix(rows: Sequence[Sequence]) -> sympy.Matrix:
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in r]
                         for r in rows])


def row_space_basis(vectors: Sequence[Sequence], width: int) -> list[Vec]:
    """Reduced row-echelon basis of the span."""
    if not vectors:
        return []
    R, pivots = _matrix(vectors).rref()
    return [tuple(Fraction(int(x.p), int(x.q)) for x in R.row(i)) for i in range(len(pivots))]


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return _matrix(vectors).rank()


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


# -- the Clifford algebra ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class CliffordAlgebraSplit:
    """``e * (L^{(x)n})^{Sym_n}`` with its basis indexed by sections.

    ``orbits[k]`` lists the tuple indices of one Sym_n-orbit inside the
    support of ``e``; ``section_of_orbit[k]`` is the section it spans.
    Elements are handled as functions on sections (tuples indexed by
    section number), converted to and from tensors on demand.
    """

    covering: Covering
    tuples: tuple[tuple[int, ...], ...] = field(repr=False)
    e: tuple[int, ...] = field(repr=False)
    orbits: tuple[tuple[int, ...], ...] = field(repr=False)
    section_of_orbit: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.covering.n

    @property
    def dimension(self) -> int:
        return len(self.orbits)

    @cached_property
    def clifford(self):
        return clifford_set(self.covering)

    @cached_property
    def L(self) -> SplitEtaleAlgebra:
        return SplitEtaleAlgebra(self.covering.total.size)

    @cached_property
    def L0(self) -> SplitEtaleAlgebra:
        return SplitEtaleAlgebra(self.n)

    @cached_property
    def _orbit_of_section(self) -> dict[int, int]:
        return {s: k for k, s in enumerate(self.section_of_orbit)}

    def pullback(self, x0: Sequence) -> Vec:
        """Embed L0 into L along pi."""
        return tuple(Fraction(x0[b]) for b in self.covering.pi)

    def to_tensor(self, f: Sequence) -> list:
        v: list = [0] * len(self.tuples)
        for k, orb in enumerate(self.orbits):
            val = f[self.section_of_orbit[k]]
            for t in orb:
                v[t] = val
        return v

    def from_tensor(self, v: Sequence) -> Vec:
        """Read a tensor in the subalgebra back as a function on sections."""
        for t, et in enumerate(self.e):
            if not et and v[t] != 0:
                raise ValueError("tensor is not supported on the fat-diagonal complement")
        f: list = [Fraction(0)] * self.dimension
        for k, orb in enumerate(self.orbits):
            vals = {Fraction(v[t]) for t in orb}
            if len(vals) != 1:
                raise ValueError("tensor is not Sym_n-invariant")
            f[self.section_of_orbit[k]] = vals.pop()
        return tuple(f)

    def tensor_c(self, x: Sequence) -> list:
        """e * (x(x)1..1 + 1(x)x(x)..1 + ... + 1..1(x)x) as a tensor."""
        return [et * sum((Fraction(x[y]) for y in t), Fraction(0)) if et else Fraction(0)
                for t, et in zip(self.tuples, self.e)]

    def mul(self, f: Sequence, g: Sequence) -> Vec:
        return tuple(Fraction(a) * b for a, b in zip(f, g))

    def one(self) -> Vec:
        return (Fraction(1),) * self.dimension

    def involution(self, f: Sequence) -> Vec:
        """Precomposition with section complement."""
        return tuple(f[j] for j in self.clifford.complement)


def clifford_algebra_split(cov: Covering) -> CliffordAlgebraSplit:
    if cov.group.order != 1:
        raise ValueError("the split Clifford algebra needs the trivial group")
    if cov.degree != 2:
        raise ValueError("needs a degree-2 covering")
    n = cov.n
    if n > MAX_TENSOR_N:
        raise SizeLimitError(f"tensor powers are materialised only for n <= {MAX_TENSOR_N}")
    m = cov.total.size
    tuples = tensor_indices(m, n)
    chi = fat_diagonal_idempotent(n, n)
    # pullback of chi along pi^n
    e = tuple(chi[sum(cov.pi[y] * n ** (n - 1 - i) for i, y in enumerate(t))] for t in tuples)
    groups: dict[tuple[int, ...], list[int]] = {}
    for k, (t, et) in enumerate(zip(tuples, e)):
        if et:
            groups.setdefault(tuple(sorted(t)), []).append(k)
    C = clifford_set(cov)
    keys = sorted(groups)
    section_of_orbit = []
    for key in keys:
        mask = 0
        for y in key:
            mask |= 1 << y
        section_of_orbit.append(C.index_of_mask(mask))
    if sorted(section_of_orbit) != list(range(len(C))):
        raise AssertionError("Sym_n-orbits do not match the sections")
    return CliffordAlgebraSplit(
        covering=cov,
        tuples=tuple(tuples),
        e=e,
        orbits=tuple(tuple(groups[k]) for k in keys),
        section_of_orbit=tuple(section_of_orbit),
    )


def c_map(A: CliffordAlgebraSplit, x: Sequence) -> Vec:
    """The linear map L -> C(L/L0), computed in the tensor power.

    On sections it equals ``w -> sum of x over w``; that identity is
    asserted on every call.
    """
    if len(x) != A.covering.total.size:
        raise ValueError("x must be a function on the total space")
    f = A.from_tensor(A.tensor_c(x))
    C = A.clifford
    closed = tuple(sum((Fraction(x[y]) for y in C.points(i)), Fraction(0)) for i in range(len(C)))
    if f != closed:
        raise AssertionError("tensor expansion of c_L disagrees with the section-sum formula")
    return f


def c_matrix_columns(A: CliffordAlgebraSplit) -> list[Vec]:
    return [c_map(A, A.L.indicator(y)) for y in range(A.L.size)]


# -- verification reports ----------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    name: str
    passed: bool
    details: dict[str, Any]

    def as_dict(self) -> dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def kernel_check(A: CliffordAlgebraSplit) -> VerificationReport:
    """ker c_L equals the trace-zero part of L0 pulled back to L."""
    cols = c_matrix_columns(A)
    M = _matrix(cols).T  # rows: sections, columns: points of Y
    kernel = [tuple(Fraction(int(x.p), int(x.q)) for x in v) for v in M.nullspace()]
    kernel = row_space_basis(kernel, A.L.size)
    trace_zero = [A.pullback(tuple(Fraction(int(i == 0) - int(i == b)) for i in range(A.n)))
                  for b in range(1, A.n)]
    trace_zero = row_space_basis(trace_zero, A.L.size)
    passed = same_span(kernel, trace_zero) if kernel or trace_zero else True
    return VerificationReport("kernel", passed, {
        "kernel_dimension": len(kernel),
        "trace_zero_dimension": len(trace_zero),
        "kernel_basis": [_fmt(v) for v in kernel],
        "trace_zero_basis": [_fmt(v) for v in trace_zero],
    })


def generation_check(A: CliffordAlgebraSplit) -> VerificationReport:
    """Close c_L(L) under products and spans; it must fill the algebra."""
    basis = row_space_basis(c_matrix_columns(A), A.dimension)
    dims = [len(basis)]
    while True:
        prods = [A.mul(a, b) for a, b in itertools.combinations_with_replacement(basis, 2)]
        new = row_space_basis(basis + prods, A.dimension)
        if len(new) == len(basis):
            break
        basis = new
        dims.append(len(basis))
    passed = len(basis) == A.dimension
    return VerificationReport("generation", passed, {
        "dimension": A.dimension,
        "closure_dimensions": dims,
        "rounds": len(dims) - 1,
    })


def algebra_iso_check(A: CliffordAlgebraSplit) -> VerificationReport:
    """Pointwise products on sections agree with tensor products, on all basis pairs."""
    N = A.dimension
    basis = [A.to_tensor([int(i == j) for j in range(N)]) for i in range(N)]
    ok = True
    for i in range(N):
        for j in range(i, N):
            prod = [a * b for a, b in zip(basis[i], basis[j])]
            expect = basis[i] if i == j else [0] * len(prod)
            if prod != expect:
                ok = False
    idem = all(x * x == x for x in A.e)
    return VerificationReport("section_basis_iso", ok and idem and N == 2 ** A.n, {
        "dimension": N,
        "expected_dimension": 2 ** A.n,
        "e_idempotent": idem,
    })


def closed_form_check(A: CliffordAlgebraSplit) -> VerificationReport:
    C = A.clifford
    ok = True
    for y in range(A.L.size):
        x = A.L.indicator(y)
        tensor_side = A.from_tensor(A.tensor_c(x))
        closed = tuple(Fraction(int(A.clifford.sections[i] >> y & 1)) for i in range(len(C)))
        ok &= tensor_side == closed
    return VerificationReport("closed_form", ok, {"basis_elements_checked": A.L.size})


def involution_check(A: CliffordAlgebraSplit) -> VerificationReport:
    """Functions fixed by the transported complement form a 2^(n-1)-dim subalgebra."""
    N = A.dimension
    comp = A.clifford.complement
    rows = [[int(j == comp[i]) - int(j == i) for j in range(N)] for i in range(N)]
    fixed = [tuple(Fraction(int(x.p), int(x.q)) for x in v) for v in _matrix(rows).nullspace()]
    closed = all(A.involution(A.mul(a, b)) == A.mul(a, b) for a in fixed for b in fixed)
    return VerificationReport("involution_fixed", len(fixed) == 2 ** (A.n - 1) and closed, {
        "fixed_dimension": len(fixed),
        "expected": 2 ** (A.n - 1),
    })


def rho(x: Sequence, y: Sequence) -> list[Fraction]:
    """x (x) 1 + 1 (x) y as a function on pairs, index ``i * len(y) + j``."""
    return [Fraction(a) + b for a in x for b in y]


def product_compatibility_check(cov1: Covering, cov2: Covering) -> VerificationReport:
    """Commutativity of P o c_{LxM} = (c_L (x) c_M) o rho on all basis elements.

    The right-hand vertical map sends ``x (x) 1 + 1 (x) y`` to
    ``c_L(x) (x) 1 + 1 (x) c_M(y)``.
    """
    A1, A2 = clifford_algebra_split(cov1), clifford_algebra_split(cov2)
    A = clifford_algebra_split(disjoint_union_covering(cov1, cov2))
    iso = clifford_product_iso(cov1, cov2)
    N2 = A2.dimension
    m1, m2 = A1.L.size, A2.L.size

    def P(f):
        return tuple(f[iso.mapping[k]] for k in range(A1.dimension * N2))

    ok = True
    checked = 0
    for y in range(m1 + m2):
        xy = A.L.indicator(y)
        x, z = xy[:m1], xy[m1:]
        left = P(c_map(A, xy))
        cx, cz = c_map(A1, x), c_map(A2, z)
        right = tuple(a + b for a in cx for b in cz)
        ok &= left == right
        checked += 1
    units = rho(A1.L.one(), A2.L.one())
    c1, c2 = c_map(A1, A1.L.one()), c_map(A2, A2.L.one())
    unit_ok = P(c_map(A, A.L.one())) == tuple(a + b for a in c1 for b in c2) \
        and set(units) == {Fraction(2)}
    return VerificationReport("product_compatibility", ok and unit_ok and iso.is_bijective(), {
        "dimension": A.dimension,
        "tensor_dimension": A1.dimension * A2.dimension,
        "basis_elements_checked": checked,
        "units_ok": unit_ok,
    })


def run_all_checks(cov: Covering) -> list[VerificationReport]:
    A = clifford_algebra_split(cov)
    return [
        algebra_iso_check(A),
        closed_form_check(A),
        kernel_check(A),
        generation_check(A),
        involution_check(A),
    ]
