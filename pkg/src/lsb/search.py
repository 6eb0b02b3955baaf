"""Exhaustive search for two-step algebras with prescribed [L,L] and L/Z(L).

Every two-step nilpotent algebra is a central extension of a base by a block
containing [L,L], so ranging over all cocycles at each admissible split of
dimensions covers the class.  Cocycles are taken up to a nonzero scalar
(first nonzero entry 1), which changes neither invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .breadth import cross_check
from .enumeration import CHUNK, ORACLE_CAP, projective_block
from .errors import InvalidParams, SearchCapExceeded
from .exactlin import F3, Field, GradedDim, batch_rank
from .lsafile import serialize
from .superalg import LieSuperAlgebra, central_extension, cocycle_from_values, cocycle_slots

SEARCH_CAP = 10 ** 8


@dataclass(frozen=True)
class SearchConstraints:
    derived: GradedDim
    quotient: GradedDim
    odd_square_zero: bool = False


@dataclass(frozen=True)
class SearchResult:
    found: bool
    candidates: int
    algebra: LieSuperAlgebra | None = None
    base: GradedDim | None = None
    center: GradedDim | None = None
    cross_check: str | None = None

    @property
    def outcome(self) -> str:
        return "Witness" if self.found else "Empty"

    def record(self, c: SearchConstraints, field: Field, max_total: int) -> dict:
        rec = {"outcome": self.outcome, "derived": c.derived, "quotient": c.quotient,
               "odd_square_zero": c.odd_square_zero, "field": field, "max_total": max_total,
               "candidates": self.candidates}
        if self.found:
            rec.update(base=self.base, center=self.center, cross_check=self.cross_check)
        return rec


def splits(c: SearchConstraints, max_total: int) -> list[tuple[GradedDim, GradedDim]]:
    """(base, center) with base >= quotient and center >= derived componentwise, by total size."""
    out = []
    for t in range(max_total + 1):
        for b0 in range(c.quotient.even, t + 1):
            for b1 in range(c.quotient.odd, t + 1 - b0):
                for c0 in range(c.derived.even, t + 1 - b0 - b1):
                    c1 = t - b0 - b1 - c0
                    if c1 >= c.derived.odd:
                        out.append((GradedDim(b0, b1), GradedDim(c0, c1)))
    return out


def _slot_tables(base: GradedDim, center: GradedDim, odd_square_zero: bool):
    slots = cocycle_slots(base, center)
    nb = base.total()
    if odd_square_zero:
        slots = [(i, j, t) for (i, j, t) in slots if not (i >= base.even and j >= base.even)]
    return slots, nb


def _invariants(X: np.ndarray, slots, base: GradedDim, center: GradedDim, p: int):
    """Derived dims and L/Z(L) dims for a batch of cocycle value vectors."""
    B = len(X)
    nb, nc = base.total(), center.total()
    # T[b, i, j, t] = value of [e_i, e_j] on center coordinate t, with the mirrored pair filled in
    T = np.zeros((B, nb, nb, nc), dtype=np.int64)
    for col, (i, j, t) in enumerate(slots):
        T[:, i, j, t] = X[:, col]
        if i != j:
            s = 1 if (i >= base.even and j >= base.even) else -1
            T[:, j, i, t] = (s * X[:, col]) % p
    pairs = T.reshape(B, nb * nb, nc)
    d_even = batch_rank(pairs[:, :, :center.even], p)
    d_odd = batch_rank(pairs[:, :, center.even:], p)
    # a base vector is central iff its row of brackets vanishes
    rows = T.reshape(B, nb, nb * nc)
    q_even = batch_rank(rows[:, :base.even, :], p)
    q_odd = batch_rank(rows[:, base.even:, :], p)
    return d_even, d_odd, q_even, q_odd


def inhabitation_search(c: SearchConstraints, field: Field = F3, max_total: int = 6,
                        cap: int = SEARCH_CAP, check_oracle: bool = True) -> SearchResult:
    """First two-step algebra (in enumeration order) meeting the constraints, or Empty."""
    if not field.is_prime:
        raise InvalidParams("inhabitation search runs over a prime field")
    if max_total > 6:
        raise InvalidParams("inhabitation search is limited to total dimension 6")
    p = field.p
    examined = 0
    budget = 0
    for base, center in splits(c, max_total):
        slots, _ = _slot_tables(base, center, c.odd_square_zero)
        m = len(slots)
        budget += p ** m
        if budget > cap:
            raise SearchCapExceeded(
                f"split base {base} center {center} pushes the search past {cap} cocycles")
        for s in range(0, p ** m, CHUNK):
            _, X = projective_block(m, p, s, min(p ** m, s + CHUNK))
            if not len(X):
                continue
            de, do, qe, qo = _invariants(X, slots, base, center, p)
            hit = ((de == c.derived.even) & (do == c.derived.odd)
                   & (qe == c.quotient.even) & (qo == c.quotient.odd))
            idx = np.nonzero(hit)[0]
            if len(idx):
                examined += int(idx[0]) + 1
                return _witness(X[idx[0]], slots, base, center, field, examined, check_oracle)
            examined += len(X)
    return SearchResult(False, examined)


def _witness(values, slots, base, center, field, examined, check_oracle) -> SearchResult:
    all_slots = cocycle_slots(base, center)
    full = [0] * len(all_slots)
    pos = {s: k for k, s in enumerate(all_slots)}
    for v, s in zip(values, slots):
        full[pos[s]] = int(v)
    L = central_extension(base, center, cocycle_from_values(base, center, full, field), field)
    cc = None
    if check_oracle and field.p ** L.n <= ORACLE_CAP:
        res = cross_check(L)
        cc = "Agree" if res.agree else f"Disagree: {res.details}"
    return SearchResult(True, examined, L, base, center, cc)


def witness_text(r: SearchResult) -> str:
    return serialize(r.algebra) if r.algebra is not None else ""
