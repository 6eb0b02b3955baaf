"""Structural invariants: derived algebra, center, centralizers, maximal
abelian ideals, breadth restricted to an ideal, and the spaces M_x, D_x, T_A.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .enumeration import AdjointMaps, iter_ranks, max_rank_scan, projective_block
from .errors import NotNilpotent, UnsupportedMethod
from .exactlin import (GradedDim, Matrix, Subspace, canonicalize, complement_basis, rank_kernel,
                       subspace_intersection, subspace_sum)
from .superalg import LieSuperAlgebra, adjoint_matrix, bracket, is_nilpotent

D_SPACE_MAX_DIM = 6
D_SPACE_MAX_Q = 7
Q_HEIGHT = 3


def _graded_dims(S: Subspace) -> GradedDim:
    if S.graded is None:  # pragma: no cover - only called on homogeneous constructions
        raise ValueError(f"expected a graded subspace, got {S}")
    return S.graded


@lru_cache(maxsize=4096)
def derived_subalgebra(L: LieSuperAlgebra) -> Subspace:
    """[L, L]: span of all basis brackets."""
    return L.span([L.sc[i][j] for i in range(L.n) for j in range(i, L.n)])


def derived_even_split(L: LieSuperAlgebra) -> tuple[int, int, int]:
    """(dim [L0,L0], dim [L1,L1], dim [L0,L1])."""
    s, n = L.split, L.n
    ee = L.span([L.sc[i][j] for i in range(s) for j in range(s)])
    oo = L.span([L.sc[i][j] for i in range(s, n) for j in range(s, n)])
    eo = L.span([L.sc[i][j] for i in range(s) for j in range(s, n)])
    return ee.dim, oo.dim, eo.dim


def _kernel(L: LieSuperAlgebra, rows: list) -> Subspace:
    if not rows:
        return Subspace.whole(L.field, L.n, L.split)
    return rank_kernel(Matrix.from_rows(L.field, rows, L.n), L.split)[1]


def _annihilator_rows(L: LieSuperAlgebra, vectors: Sequence[Sequence]) -> list:
    """Rows in x expressing [x, v] = 0 for every v in ``vectors``."""
    f = L.field
    rows = []
    for v in vectors:
        for k in range(L.n):
            row = [f.zero] * L.n
            for i in range(L.n):
                row[i] = f.reduce(sum(v[j] * L.sc[i][j][k] for j in range(L.n) if v[j] != 0))
            rows.append(row)
    return rows


@lru_cache(maxsize=4096)
def center(L: LieSuperAlgebra) -> Subspace:
    """Z(L) = {z : [z, e_j] = 0 for all j}."""
    return _kernel(L, _annihilator_rows(L, [L.basis_vector(j) for j in range(L.n)]))


@lru_cache(maxsize=4096)
def centralizer(L: LieSuperAlgebra, A: Subspace) -> Subspace:
    """C_L(A) = {x : [x, a] = 0 for all a in A}, from a basis of A."""
    return _kernel(L, _annihilator_rows(L, A.basis))


def odd_square_vanishes(L: LieSuperAlgebra) -> bool:
    """True iff [y_i, y_j] = 0 for all odd basis pairs (so no [w, w] is nonzero)."""
    s, n = L.split, L.n
    return all(x == 0 for i in range(s, n) for j in range(s, n) for x in L.sc[i][j])


def bracket_space(L: LieSuperAlgebra, U: Subspace, V: Subspace) -> Subspace:
    """[U, V]: span of brackets of basis vectors."""
    return L.span([bracket(L, u, v) for u in U.basis for v in V.basis])


def whole(L: LieSuperAlgebra) -> Subspace:
    return Subspace.whole(L.field, L.n, L.split)


@dataclass(frozen=True)
class InvariantProfile:
    derived: Subspace
    center: Subspace
    quotient_center_dims: GradedDim
    odd_square_vanishes: bool
    derived_even_split: tuple[int, int, int]

    @property
    def derived_dims(self) -> GradedDim:
        return _graded_dims(self.derived)

    @property
    def center_dims(self) -> GradedDim:
        return _graded_dims(self.center)


@lru_cache(maxsize=4096)
def profile(L: LieSuperAlgebra) -> InvariantProfile:
    Z = center(L)
    return InvariantProfile(derived_subalgebra(L), Z, L.dims - _graded_dims(Z),
                            odd_square_vanishes(L), derived_even_split(L))


# ---------------------------------------------------------------------------
# maximal abelian ideals


def _require_nilpotent(L: LieSuperAlgebra) -> None:
    if not is_nilpotent(L)[0]:
        raise NotNilpotent("maximal abelian ideal search assumes a nilpotent algebra")


def extension_space(L: LieSuperAlgebra, A: Subspace) -> Subspace:
    """W = {x : [L, x] in A and [A, x] = 0}; contains A when A is an abelian ideal."""
    f = L.field
    if A.dim:
        ann = rank_kernel(Matrix.from_rows(f, A.basis, L.n))[1].basis
    else:
        ann = [L.basis_vector(k) for k in range(L.n)]
    rows = []
    for u in ann:
        for i in range(L.n):
            rows.append([f.reduce(sum(u[k] * L.sc[i][j][k] for k in range(L.n) if u[k] != 0))
                         for j in range(L.n)])
    # [a, x] = 0 for a in A
    for a in A.basis:
        for k in range(L.n):
            rows.append([f.reduce(sum(a[i] * L.sc[i][j][k] for i in range(L.n) if a[i] != 0))
                         for j in range(L.n)])
    return _kernel(L, rows)


def _homogeneous_parts(L: LieSuperAlgebra, S: Subspace) -> tuple[Subspace, Subspace]:
    ev = [b for b in S.basis if all(x == 0 for x in b[L.split:])]
    od = [b for b in S.basis if all(x == 0 for x in b[:L.split])]
    return L.span(ev), L.span(od)


def _combinations(L: LieSuperAlgebra, c: int):
    """Coefficient vectors standing for the lines of F^c (or a height-bounded sample over Q)."""
    if L.field.is_prime:
        p = L.field.p
        _, X = projective_block(c, p, 0, p ** c)
        return [tuple(int(t) for t in row) for row in X[1:]]
    vals = range(-Q_HEIGHT, Q_HEIGHT + 1)
    out = []
    for v in itertools.product(vals, repeat=c):
        nz = [t for t in v if t]
        if nz and nz[0] > 0:
            out.append(v)
    return out


def _combine(L: LieSuperAlgebra, coeffs, vectors) -> tuple:
    f = L.field
    return tuple(f.reduce(sum(f(c) * v[k] for c, v in zip(coeffs, vectors))) for k in range(L.n))


def _odd_square_zeros(L: LieSuperAlgebra, comp: list, first_only: bool) -> list[tuple]:
    """Elements x = sum c_t u_t (c a line) with [x, x] = 0, in enumeration order."""
    if not comp:
        return []
    c = len(comp)
    if L.field.is_prime:
        p = L.field.p
        G = np.array([[bracket(L, u, v) for v in comp] for u in comp], dtype=np.int64)
        _, X = projective_block(c, p, 0, p ** c)
        X = X[1:]
        q = np.einsum("bs,bt,stk->bk", X, X, G) % p
        hits = np.nonzero(~q.any(axis=1))[0]
        if first_only:
            hits = hits[:1]
        return [_combine(L, [int(t) for t in X[h]], comp) for h in hits]
    out = []
    for coeffs in _combinations(L, c):
        x = _combine(L, coeffs, comp)
        if not any(bracket(L, x, x)):
            out.append(x)
            if first_only:
                break
    return out


def _candidates(L: LieSuperAlgebra, A: Subspace, first_only: bool) -> tuple[list[tuple], bool]:
    """Homogeneous x in W minus A with [x, x] = 0, one per line modulo A.

    Returns (candidates, conclusive); ``conclusive`` is False only over Q when
    an odd search came back empty.
    """
    W = extension_space(L, A)
    W0, W1 = _homogeneous_parts(L, W)
    A0, A1 = _homogeneous_parts(L, A)
    c0 = complement_basis(W0, A0)
    c1 = complement_basis(W1, A1)
    out: list[tuple] = []
    if c0:
        if first_only:
            return [c0[0]], True
        out += [_combine(L, co, c0) for co in _combinations(L, len(c0))]
    odd = _odd_square_zeros(L, c1, first_only)
    out += odd
    conclusive = L.field.is_prime or not c1 or bool(odd)
    return out, conclusive


def saturate(L: LieSuperAlgebra, A: Subspace) -> tuple[Subspace, bool]:
    """Extend an abelian ideal one admissible element at a time until none is left."""
    confirmed = True
    while True:
        cands, ok = _candidates(L, A, first_only=True)
        if not cands:
            return A, confirmed and ok
        A = subspace_sum(A, L.span([cands[0]]))


@dataclass(frozen=True)
class MaximalIdeals:
    ideals: tuple[Subspace, ...]
    confirmed: bool = True

    def __iter__(self):
        return iter(self.ideals)

    def __len__(self) -> int:
        return len(self.ideals)

    def __contains__(self, S) -> bool:
        return S in self.ideals


@lru_cache(maxsize=1024)
def maximal_abelian_ideals(L: LieSuperAlgebra) -> MaximalIdeals:
    """Fixed points of saturation from Z(L) and from every admissible single seed over Z(L)."""
    _require_nilpotent(L)
    Z = center(L)
    seeds, ok = _candidates(L, Z, first_only=False)
    found: list[Subspace] = []
    confirmed = ok
    for start in [Z] + [subspace_sum(Z, L.span([s])) for s in seeds]:
        A, c = saturate(L, start)
        confirmed = confirmed and c
        if A not in found:
            found.append(A)
    return MaximalIdeals(tuple(found), confirmed)


def is_abelian_ideal(L: LieSuperAlgebra, A: Subspace) -> bool:
    if bracket_space(L, A, A).dim:
        return False
    return bracket_space(L, whole(L), A).issubset(A)


def is_maximal_abelian(L: LieSuperAlgebra, A: Subspace) -> bool:
    """Abelian ideal admitting no single admissible extension (prime fields)."""
    return is_abelian_ideal(L, A) and not _candidates(L, A, first_only=True)[0]


# ---------------------------------------------------------------------------
# breadth relative to an ideal


def _restrict(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> Matrix:
    ad = adjoint_matrix(L, x)
    cols = [ad.apply(a) for a in A.basis]
    return Matrix.from_columns(L.field, cols, L.n)


def element_ideal_breadth(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> int:
    """b_A(x) = rank of ad_x restricted to A."""
    return _restrict(L, A, x).rank()


def element_ideal_pair(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> GradedDim:
    """Even/odd projection dimensions of ad_x(A)."""
    m = _restrict(L, A, x)
    return L.span(m.transpose().as_rows()).projection_dims()


def ideal_kernel(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> Subspace:
    """{a in A : [x, a] = 0}."""
    return subspace_intersection(A, centralizer(L, L.span([x])))


@dataclass(frozen=True)
class IdealBreadthReport:
    total: int
    pairs: frozenset
    witness: tuple

    @property
    def value(self) -> GradedDim | int:
        """The pair when all maximizers agree on it, else the total."""
        if len(self.pairs) == 1:
            return next(iter(self.pairs))
        return self.total


def _require_prime(L: LieSuperAlgebra, what: str) -> None:
    if not L.field.is_prime:
        raise UnsupportedMethod(f"{what} enumerates the whole algebra and needs a prime field")


def _maps(L: LieSuperAlgebra, A: Subspace | None) -> AdjointMaps:
    right = None if A is None else np.array(A.basis, dtype=np.int64).reshape(A.dim, L.n)
    return AdjointMaps(np.asarray(L.array), L.field.p, right)


@lru_cache(maxsize=4096)
def ideal_breadth(L: LieSuperAlgebra, A: Subspace, jobs: int = 1) -> IdealBreadthReport:
    """b_A(L) = max over x of rank ad_x|_A, with first maximizer in enumeration order."""
    _require_prime(L, "b_A(L)")
    res = max_rank_scan(_maps(L, A), L.n, L.field.p, L.split, jobs=jobs)
    return IdealBreadthReport(res.total, frozenset(res.pairs), res.witness)


def elements_with_ideal_breadth(L: LieSuperAlgebra, A: Subspace, value: int) -> list[tuple]:
    """Projective representatives x with b_A(x) = value (so value 1 lists T_A up to scaling)."""
    _require_prime(L, "T_A")
    out = []
    for X, r in iter_ranks(_maps(L, A), L.n, L.field.p):
        out.extend(tuple(int(c) for c in X[t]) for t in np.nonzero(r == value)[0])
    return out


def in_t_a(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> bool:
    return element_ideal_breadth(L, A, x) == 1


# ---------------------------------------------------------------------------
# M_x and D_x


def m_space(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> Subspace:
    """M_x = C_L(A) + ker ad_x."""
    ker = rank_kernel(adjoint_matrix(L, x), L.split)[1]
    return subspace_sum(centralizer(L, A), ker)


def d_space(L: LieSuperAlgebra, A: Subspace, x: Sequence) -> Subspace:
    """D_x = intersection of M_{a+x} over every a in C_L(A)."""
    _require_prime(L, "D_x")
    C = centralizer(L, A)
    p = L.field.p
    if C.dim > D_SPACE_MAX_DIM or p > D_SPACE_MAX_Q:
        raise UnsupportedMethod(
            f"D_x enumerates {p}^{C.dim} elements; limited to dim C_L(A) <= {D_SPACE_MAX_DIM}, q <= {D_SPACE_MAX_Q}")
    f = L.field
    D = None
    for coeffs in itertools.product(range(p), repeat=C.dim):
        a = _combine(L, coeffs, C.basis) if C.dim else L.zero()
        y = tuple(f.reduce(ai + xi) for ai, xi in zip(a, x))
        M = m_space(L, A, y)
        D = M if D is None else subspace_intersection(D, M)
        if D == C:
            break
    return canonicalize(D.basis, L.n, f, L.split)
