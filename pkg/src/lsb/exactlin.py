"""Exact linear algebra over odd prime fields and the rationals.

Everything here is small and dense: matrices hold a handful of rows, so the
kernels are plain Python over ints (mod p) or ``Fraction``.  Bulk work over
many matrices at once lives in :func:`batch_rank`, which is numpy based and
prime-field only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, FieldError

MAX_PRIME = 97


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """F_p for an odd prime ``p`` (3 <= p <= 97), or the rationals when ``p`` is None."""

    p: int | None = 5

    def __post_init__(self):
        if self.p is None:
            return
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise FieldError(f"field modulus {self.p!r} is not prime")
        if self.p == 2:
            raise FieldError("characteristic 2 is not supported")
        if self.p > MAX_PRIME:
            raise FieldError(f"prime {self.p} exceeds the supported bound {MAX_PRIME}")

    @property
    def is_prime(self) -> bool:
        return self.p is not None

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def __call__(self, x):
        """Coerce an int, Fraction or ``"a/b"`` string into a canonical field element."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, (np.integer,)):
            x = int(x)
        if not isinstance(x, int):
            raise FieldError(f"cannot coerce {x!r} into {self}")
        return x % self.p

    def reduce(self, x):
        return x % self.p if self.p is not None else x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(x)
        return pow(int(x), -1, self.p)

    def neg(self, x):
        return self.reduce(-x)

    def elements(self) -> range:
        if self.p is None:
            raise FieldError("the rationals cannot be enumerated")
        return range(self.p)

    def __str__(self) -> str:
        return f"F{self.p}" if self.p is not None else "Q"


QQ = Field(None)
F3, F5, F7 = Field(3), Field(5), Field(7)


@dataclass(frozen=True, order=True)
class GradedDim:
    """A (even, odd) dimension pair."""

    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"negative graded dimension ({self.even},{self.odd})")

    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: GradedDim) -> GradedDim:
        return GradedDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: GradedDim) -> GradedDim:
        return GradedDim(self.even - other.even, self.odd - other.odd)

    def __iter__(self):
        return iter((self.even, self.odd))

    def __str__(self) -> str:
        return f"({self.even},{self.odd})"

    @classmethod
    def parse(cls, text: str) -> GradedDim:
        a, b = text.strip().strip("()").split(",")
        return cls(int(a), int(b))


# ---------------------------------------------------------------------------
# row reduction


def rref(field: Field, rows: Iterable[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [[field.reduce(x) for x in r] for r in rows]
    for r in work:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column system")
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        piv = next((i for i in range(top, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[top], work[piv] = work[piv], work[top]
        inv = field.inv(work[top][c])
        work[top] = [field.reduce(x * inv) for x in work[top]]
        prow = work[top]
        for i in range(len(work)):
            if i != top and work[i][c] != 0:
                f = work[i][c]
                work[i] = [field.reduce(a - f * b) for a, b in zip(work[i], prow)]
        pivots.append(c)
        top += 1
        if top == len(work):
            break
    return work[:top], pivots


@dataclass(frozen=True)
class Matrix:
    """Dense matrix stored row-major as a flat tuple of canonical entries."""

    field: Field
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatch("ragged matrix rows")
        return cls(field, len(rows), cols, tuple(field(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int) -> Matrix:
        return cls.from_rows(field, [[col[i] for col in columns] for i in range(nrows)], len(columns))

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def as_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> Matrix:
        return Matrix(self.field, self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.cols} columns")
        f = self.field
        return tuple(f.reduce(sum(a * b for a, b in zip(self.row(i), v))) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def rank(self) -> int:
        return len(rref(self.field, self.as_rows(), self.cols)[0])


def rank_kernel(m: Matrix, split: int | None = None) -> tuple[int, Subspace]:
    """Rank of ``m`` and its right kernel as a canonical subspace of F^cols."""
    red, pivots = rref(m.field, m.as_rows(), m.cols)
    f = m.field
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, pc in zip(red, pivots):
            v[pc] = f.neg(r[fc])
        basis.append(v)
    return len(pivots), canonicalize(basis, m.cols, f, split)


def rank(m: Matrix) -> int:
    return m.rank()


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n stored by its reduced row-echelon basis.

    ``split`` is the number of leading (even) coordinates; ``graded`` is set
    exactly when the subspace is the direct sum of its intersections with the
    even and odd coordinate blocks.
    """

    field: Field
    ambient_dim: int
    basis: tuple[tuple, ...]
    split: int | None = None
    graded: GradedDim | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    @classmethod
    def zero(cls, field: Field, n: int, split: int | None = None) -> Subspace:
        return canonicalize([], n, field, split)

    @classmethod
    def whole(cls, field: Field, n: int, split: int | None = None) -> Subspace:
        return canonicalize([[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
                            n, field, split)

    def is_graded(self) -> bool:
        return self.graded is not None

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def issubset(self, other: Subspace) -> bool:
        return all(contains(other, b) for b in self.basis)

    def projection_dims(self) -> GradedDim:
        """Dimensions of the even and odd coordinate projections."""
        s = self.split if self.split is not None else self.ambient_dim
        ev = len(rref(self.field, [b[:s] for b in self.basis], s)[0])
        od = len(rref(self.field, [b[s:] for b in self.basis], self.ambient_dim - s)[0])
        return GradedDim(ev, od)

    def with_split(self, split: int | None) -> Subspace:
        return canonicalize(self.basis, self.ambient_dim, self.field, split)

    def __str__(self) -> str:
        g = f" graded={self.graded}" if self.graded else ""
        return f"<dim {self.dim} in F^{self.ambient_dim}{g}: {[list(map(str, b)) for b in self.basis]}>"


def _grading(basis: Sequence[Sequence], split: int | None) -> GradedDim | None:
    if split is None:
        return None
    ev = od = 0
    for b in basis:
        has_even = any(x != 0 for x in b[:split])
        has_odd = any(x != 0 for x in b[split:])
        if has_even and has_odd:
            return None
        if has_even:
            ev += 1
        else:
            od += 1
    return GradedDim(ev, od)


def canonicalize(vectors: Iterable[Sequence], ambient_dim: int, field: Field,
                 split: int | None = None) -> Subspace:
    """The span of ``vectors`` in canonical (reduced echelon) form."""
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionMismatch(f"vector of length {len(v)} in F^{ambient_dim}")
    red, _ = rref(field, vectors, ambient_dim)
    basis = tuple(tuple(r) for r in red)
    return Subspace(field, ambient_dim, basis, split, _grading(basis, split))


def _check_compatible(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim or a.field != b.field:
        raise DimensionMismatch(
            f"subspaces of F^{a.ambient_dim} over {a.field} and F^{b.ambient_dim} over {b.field}")


def contains(a: Subspace, v: Sequence) -> bool:
    if len(v) != a.ambient_dim:
        raise DimensionMismatch(f"vector of length {len(v)} tested against F^{a.ambient_dim}")
    f = a.field
    w = [f.reduce(x) for x in v]
    for row in a.basis:
        pc = next(i for i, x in enumerate(row) if x != 0)
        if w[pc] != 0:
            c = w[pc]
            w = [f.reduce(x - c * y) for x, y in zip(w, row)]
    return all(x == 0 for x in w)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return canonicalize(a.basis + b.basis, a.ambient_dim, a.field, a.split)


def subspace_intersection(a: Subspace, b: Subspace) -> Subspace:
    """Zassenhaus: reduce [a|a] over [b|0]; rows with empty left half span the meet."""
    _check_compatible(a, b)
    n, f = a.ambient_dim, a.field
    rows = [list(v) + list(v) for v in a.basis] + [list(v) + [f.zero] * n for v in b.basis]
    red, _ = rref(f, rows, 2 * n)
    meet = [r[n:] for r in red if all(x == 0 for x in r[:n])]
    return canonicalize(meet, n, f, a.split)


def subspace_sum_intersect(a: Subspace, b: Subspace) -> tuple[Subspace, Subspace]:
    return subspace_sum(a, b), subspace_intersection(a, b)


def complement_basis(w: Subspace, a: Subspace) -> list[tuple]:
    """Vectors of ``w`` completing a basis of ``a`` (assumed inside ``w``) to one of ``a + w``."""
    _check_compatible(a, w)
    out = []
    cur = a
    for v in w.basis:
        if not contains(cur, v):
            out.append(v)
            cur = canonicalize(cur.basis + (v,), cur.ambient_dim, cur.field, cur.split)
    return out


# ---------------------------------------------------------------------------
# batched prime-field rank


def inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def batch_rank(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of matrices (shape ``(B, m, n)``) over F_p."""
    M = np.array(mats, dtype=np.int64) % p
    if M.ndim != 3:
        raise DimensionMismatch("batch_rank expects a (B, m, n) array")
    B, m, n = M.shape
    rank = np.zeros(B, dtype=np.int64)
    if B == 0 or m == 0 or n == 0:
        return rank
    inv = inverse_table(p)
    row_ids = np.arange(m)
    for c in range(n):
        cand = (M[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        r = rank[b]
        piv = np.argmax(cand[b], axis=1)
        row_r = M[b, r, :].copy()
        row_p = M[b, piv, :].copy()
        M[b, r, :] = row_p
        M[b, piv, :] = row_r
        prow = (M[b, r, :] * inv[M[b, r, c]][:, None]) % p
        M[b, r, :] = prow
        fac = M[b, :, c].copy()
        fac[np.arange(len(b)), r] = 0
        M[b] = (M[b] - fac[:, :, None] * prow[:, None, :]) % p
        rank[b] += 1
    return rank
