"""Lie superalgebras given by structure constants over an exact field.

Basis convention: indices ``0 .. even-1`` are even, ``even .. even+odd-1``
are odd.  ``sc[i][j][k]`` is the coefficient of ``e_k`` in ``[e_i, e_j]``.
Elements are plain coordinate tuples.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldError, InvalidParams
from .exactlin import F5, Field, GradedDim, Matrix, Subspace, canonicalize

AXIOMS = ("grading", "skew-symmetry", "jacobi")


def sign(pi: int, pj: int) -> int:
    """The factor s with [e_j, e_i] = s * [e_i, e_j] for parities pi, pj."""
    return 1 if (pi and pj) else -1


@dataclass(frozen=True)
class LieSuperAlgebra:
    """Structure-constant presentation.

    The constructor only checks shapes; :func:`verify_axioms` checks the
    bracket laws.  ``names`` is a labelling and does not take part in equality.
    """

    field: Field
    dims: GradedDim
    sc: tuple
    names: tuple[str, ...] = dc_field(default=(), compare=False)

    def __post_init__(self):
        n = self.dims.total()
        if len(self.sc) != n or any(len(row) != n or any(len(v) != n for v in row) for row in self.sc):
            raise DimensionMismatch(f"structure constants do not have shape {n}x{n}x{n}")
        if not self.names:
            object.__setattr__(self, "names", default_names(self.dims))
        elif len(self.names) != n:
            raise DimensionMismatch(f"{len(self.names)} names for {n} basis vectors")

    @property
    def n(self) -> int:
        return self.dims.total()

    @property
    def split(self) -> int:
        return self.dims.even

    def parity(self, i: int) -> int:
        return 0 if i < self.dims.even else 1

    def index(self, name: str) -> int:
        return self.names.index(name)

    @cached_property
    def array(self) -> np.ndarray:
        """The tensor as an int64 array (prime fields) or an object array of Fractions."""
        dtype = np.int64 if self.field.is_prime else object
        arr = np.array(self.sc, dtype=dtype).reshape(self.n, self.n, self.n)
        arr.flags.writeable = False
        return arr

    def zero(self) -> tuple:
        return (self.field.zero,) * self.n

    def basis_vector(self, i: int) -> tuple:
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.n))

    def element(self, coords: Sequence) -> tuple:
        if len(coords) != self.n:
            raise DimensionMismatch(f"element of length {len(coords)} in an algebra of dimension {self.n}")
        return tuple(self.field(x) for x in coords)

    def even_part(self, v: Sequence) -> tuple:
        s = self.split
        return tuple(v[:s]) + (self.field.zero,) * (self.n - s)

    def odd_part(self, v: Sequence) -> tuple:
        s = self.split
        return (self.field.zero,) * s + tuple(v[s:])

    def is_homogeneous(self, v: Sequence) -> bool:
        return all(x == 0 for x in v[:self.split]) or all(x == 0 for x in v[self.split:])

    def span(self, vectors) -> Subspace:
        return canonicalize(vectors, self.n, self.field, self.split)

    def bracket_basis(self, i: int, j: int) -> tuple:
        return tuple(self.sc[i][j])

    def is_abelian(self) -> bool:
        return all(x == 0 for row in self.sc for v in row for x in v)

    def __str__(self) -> str:
        return f"LieSuperAlgebra over {self.field}, dims {self.dims}"


def default_names(dims: GradedDim) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(dims.even)) + tuple(f"y{i + 1}" for i in range(dims.odd))


def from_brackets(field: Field, even_names: Sequence[str], odd_names: Sequence[str],
                  brackets: Mapping[tuple[int, int], Sequence]) -> LieSuperAlgebra:
    """Build an algebra from brackets on index pairs, deriving the mirrored half.

    Missing pairs are zero.  Giving both orders of a pair is fine when they
    agree with the sign rule; otherwise ``InvalidParams`` is raised.
    """
    dims = GradedDim(len(even_names), len(odd_names))
    n = dims.total()
    par = [0] * dims.even + [1] * dims.odd
    zero = (field.zero,) * n
    table: dict[tuple[int, int], tuple] = {}
    for (i, j), v in brackets.items():
        if len(v) != n:
            raise DimensionMismatch(f"bracket value of length {len(v)} in dimension {n}")
        v = tuple(field(x) for x in v)
        s = sign(par[i], par[j])
        mirror = tuple(field.reduce(s * x) for x in v)
        for key, val in (((i, j), v), ((j, i), mirror)):
            if key in table and table[key] != val:
                raise InvalidParams(f"bracket ({i},{j}) given inconsistently with the sign rule")
            table[key] = val
    sc = tuple(tuple(table.get((i, j), zero) for j in range(n)) for i in range(n))
    return LieSuperAlgebra(field, dims, sc, tuple(even_names) + tuple(odd_names))


# ---------------------------------------------------------------------------
# bracket and axioms


def bracket(L: LieSuperAlgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear expansion of [x, y] through the structure constants."""
    if len(x) != L.n or len(y) != L.n:
        raise DimensionMismatch("element length does not match the algebra")
    f = L.field
    out = [f.zero] * L.n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            c = xi * yj
            for k, s in enumerate(L.sc[i][j]):
                if s != 0:
                    out[k] += c * s
    return tuple(f.reduce(v) for v in out)


def adjoint_matrix(L: LieSuperAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y]; column j is [x, e_j]."""
    if len(x) != L.n:
        raise DimensionMismatch(f"element of length {len(x)} in an algebra of dimension {L.n}")
    f = L.field
    rows = [[f.zero] * L.n for _ in range(L.n)]
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j in range(L.n):
            for k, c in enumerate(L.sc[i][j]):
                if c != 0:
                    rows[k][j] += xi * c
    return Matrix.from_rows(f, [[f.reduce(v) for v in r] for r in rows], L.n)


@dataclass(frozen=True)
class Violation:
    axiom: str
    triple: tuple[int, int, int]
    names: tuple[str, str, str]

    def __str__(self) -> str:
        a, b, c = self.names
        if self.axiom == "jacobi":
            return f"jacobi identity fails on ({a},{b},{c})"
        return f"{self.axiom} violated at [{a},{b}] coefficient of {c}"


@dataclass(frozen=True)
class AlgebraReport:
    axioms_ok: bool
    violation: Violation | None = None
    nilpotent: bool | None = None
    nilpotency_class: int | None = None


def _violation(L, axiom, i, j, k) -> AlgebraReport:
    return AlgebraReport(False, Violation(axiom, (i, j, k), (L.names[i], L.names[j], L.names[k])))


def jacobi_tensor(L: LieSuperAlgebra) -> np.ndarray:
    """J[i,j,k,:] = graded Jacobi sum on the basis triple (e_i, e_j, e_k)."""
    c = L.array
    par = np.array([L.parity(i) for i in range(L.n)])
    inner = np.einsum("jkl,ilm->ijkm", c, c)  # [e_i, [e_j, e_k]]
    s_ik = np.where(np.outer(par, par) == 1, -1, 1)  # (-1)^{|a||b|}
    t1 = inner * s_ik[:, None, :, None]
    t2 = np.transpose(inner, (2, 0, 1, 3)) * s_ik[:, :, None, None]  # (-1)^{|j||i|}[e_j,[e_k,e_i]]
    t3 = np.transpose(inner, (1, 2, 0, 3)) * s_ik.T[None, :, :, None]  # (-1)^{|k||j|}[e_k,[e_i,e_j]]
    total = t1 + t2 + t3
    if L.field.is_prime:
        total = total % L.field.p
    return total


def verify_axioms(L: LieSuperAlgebra) -> AlgebraReport:
    """Check grading, graded skew-symmetry and graded Jacobi, in that order.

    Within each family the lexicographically first offending triple is
    reported.  Skew-symmetry treats the i<j half (and the diagonal) as the
    reference, so the reported pair is the mirrored entry.
    """
    n = L.n
    par = [L.parity(i) for i in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        if L.sc[i][j][k] != 0 and par[k] != (par[i] + par[j]) % 2:
            return _violation(L, "grading", i, j, k)
    for i, j, k in itertools.product(range(n), repeat=3):
        if i < j:
            continue
        if i == j:
            if par[i] == 0 and L.sc[i][i][k] != 0:
                return _violation(L, "skew-symmetry", i, j, k)
            continue
        if L.sc[i][j][k] != L.field.reduce(sign(par[i], par[j]) * L.sc[j][i][k]):
            return _violation(L, "skew-symmetry", i, j, k)
    if n:
        J = jacobi_tensor(L)
        bad = np.argwhere(np.any(J != 0, axis=3))
        if len(bad):
            i, j, k = (int(t) for t in bad[0])
            return _violation(L, "jacobi", i, j, k)
    return AlgebraReport(True)


def lower_central_series(L: LieSuperAlgebra, max_steps: int | None = None) -> list[Subspace]:
    """L^1 = L, L^{k+1} = [L, L^k], until it hits zero or stabilizes."""
    series = [L.span([L.basis_vector(i) for i in range(L.n)])]
    while series[-1].dim:
        prev = series[-1]
        nxt = L.span([bracket(L, L.basis_vector(i), v) for i in range(L.n) for v in prev.basis])
        if nxt == prev:
            break
        series.append(nxt)
        if max_steps is not None and len(series) > max_steps:
            break
    return series


def is_nilpotent(L: LieSuperAlgebra) -> tuple[bool, int | None]:
    """(True, c) with c least such that L^{c+1} = 0, else (False, None)."""
    series = lower_central_series(L)
    if series[-1].dim:
        return False, None
    return True, len(series) - 1


def report(L: LieSuperAlgebra) -> AlgebraReport:
    ax = verify_axioms(L)
    if not ax.axioms_ok:
        return ax
    nil, cls = is_nilpotent(L)
    return AlgebraReport(True, None, nil, cls)


# ---------------------------------------------------------------------------
# constructions


def direct_sum(L: LieSuperAlgebra, M: LieSuperAlgebra) -> LieSuperAlgebra:
    if L.field != M.field:
        raise FieldError(f"direct sum of algebras over {L.field} and {M.field}")
    # new order: L even, M even, L odd, M odd
    l_idx = list(range(L.dims.even)) + list(range(L.dims.even + M.dims.even,
                                                  L.dims.even + M.dims.even + L.dims.odd))
    m_idx = list(range(L.dims.even, L.dims.even + M.dims.even)) + \
        list(range(L.dims.even + M.dims.even + L.dims.odd, L.n + M.n))
    dims = L.dims + M.dims
    n = dims.total()
    zero = L.field.zero
    sc = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for A, idx in ((L, l_idx), (M, m_idx)):
        for i, j, k in itertools.product(range(A.n), repeat=3):
            sc[idx[i]][idx[j]][idx[k]] = A.sc[i][j][k]
    names = [""] * n
    for A, idx in ((L, l_idx), (M, m_idx)):
        for i, name in enumerate(A.names):
            names[idx[i]] = name
    if len(set(names)) != n:
        names = list(default_names(dims))
    return LieSuperAlgebra(L.field, dims, _freeze(sc), tuple(names))


def _freeze(sc) -> tuple:
    return tuple(tuple(tuple(v) for v in row) for row in sc)


def _extension_layout(base: GradedDim, center: GradedDim):
    """Positions of base and center basis vectors in the extended algebra."""
    b_pos = list(range(base.even)) + [base.even + center.even + t for t in range(base.odd)]
    c_pos = [base.even + t for t in range(center.even)] + \
        [base.even + center.even + base.odd + t for t in range(center.odd)]
    return b_pos, c_pos


def central_extension(base_dims: GradedDim, center_dims: GradedDim,
                      cocycle: Mapping[tuple[int, int], Sequence], field: Field = F5,
                      names: Sequence[str] | None = None) -> LieSuperAlgebra:
    """Two-step algebra: base brackets valued in an appended central block.

    ``cocycle`` maps base index pairs (i <= j, indices in base order: even
    then odd) to coordinate vectors in the center block (even then odd).
    The result has basis order base-even, center-even, base-odd, center-odd.
    """
    nb, nc = base_dims.total(), center_dims.total()
    bpar = [0] * base_dims.even + [1] * base_dims.odd
    cpar = [0] * center_dims.even + [1] * center_dims.odd
    b_pos, c_pos = _extension_layout(base_dims, center_dims)
    dims = base_dims + center_dims
    n = dims.total()
    brackets = {}
    for (i, j), val in cocycle.items():
        if not (0 <= i < nb and 0 <= j < nb):
            raise InvalidParams(f"cocycle pair ({i},{j}) outside the base")
        if len(val) != nc:
            raise InvalidParams(f"cocycle value of length {len(val)} for a center of dimension {nc}")
        if i > j:
            raise InvalidParams(f"cocycle pairs must be given with i <= j, got ({i},{j})")
        val = [field(x) for x in val]
        if i == j and bpar[i] == 0 and any(val):
            raise InvalidParams(f"even base vector {i} cannot have a nonzero square")
        want = (bpar[i] + bpar[j]) % 2
        for t, x in enumerate(val):
            if x != 0 and cpar[t] != want:
                raise InvalidParams(f"cocycle value on ({i},{j}) breaks the grading")
        full = [field.zero] * n
        for t, x in enumerate(val):
            full[c_pos[t]] = x
        brackets[(b_pos[i], b_pos[j])] = full
    if names is None:
        nm = [""] * n
        for t in range(nb):
            nm[b_pos[t]] = f"x{t + 1}" if bpar[t] == 0 else f"y{t + 1 - base_dims.even}"
        for t in range(nc):
            nm[c_pos[t]] = f"z{t + 1}" if cpar[t] == 0 else f"w{t + 1 - center_dims.even}"
        names = nm
    names = list(names)
    return from_brackets(field, names[:dims.even], names[dims.even:], brackets)


def cocycle_slots(base_dims: GradedDim, center_dims: GradedDim) -> list[tuple[int, int, int]]:
    """All admissible (i, j, t) cocycle coordinates: pair i <= j, center coordinate t."""
    bpar = [0] * base_dims.even + [1] * base_dims.odd
    cpar = [0] * center_dims.even + [1] * center_dims.odd
    slots = []
    nb = len(bpar)
    for i in range(nb):
        for j in range(i, nb):
            if i == j and bpar[i] == 0:
                continue
            want = (bpar[i] + bpar[j]) % 2
            slots.extend((i, j, t) for t in range(len(cpar)) if cpar[t] == want)
    return slots


def cocycle_from_values(base_dims: GradedDim, center_dims: GradedDim, values: Sequence,
                        field: Field) -> dict:
    nc = center_dims.total()
    coc: dict[tuple[int, int], list] = {}
    for (i, j, t), x in zip(cocycle_slots(base_dims, center_dims), values):
        coc.setdefault((i, j), [field.zero] * nc)[t] = field(int(x))
    return coc


def random_two_step(seed: int, base_dims: GradedDim, center_dims: GradedDim,
                    field: Field = F5) -> LieSuperAlgebra:
    """Central extension with independent uniform cocycle entries, deterministic in ``seed``."""
    if not field.is_prime:
        raise FieldError("random generation needs a prime field")
    rng = random.Random(seed)
    slots = cocycle_slots(base_dims, center_dims)
    values = [rng.randrange(field.p) for _ in slots]
    return central_extension(base_dims, center_dims,
                             cocycle_from_values(base_dims, center_dims, values, field), field)
