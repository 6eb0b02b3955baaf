"""Superbreadth: the exhaustive oracle, the invariant classifier and their cross-check."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .enumeration import AdjointMaps, max_rank_scan
from .errors import NotNilpotent, UnsupportedMethod
from .exactlin import GradedDim, Matrix, batch_rank
from .invariants import InvariantProfile, profile
from .superalg import LieSuperAlgebra, adjoint_matrix, is_nilpotent

ORACLE = "Oracle"
CLASSIFIER = "Classifier"
BOTH = "Both"
M3_CAVEAT = "paper-M3(ii)"


def ad_matrix(L: LieSuperAlgebra, x: Sequence) -> Matrix:
    """Matrix of y -> [x, y] in the standard basis."""
    return adjoint_matrix(L, x)


def element_breadth(L: LieSuperAlgebra, x: Sequence) -> tuple[int, GradedDim]:
    """(rank ad_x, even/odd projection dimensions of its image)."""
    ad = ad_matrix(L, x)
    image = L.span(ad.transpose().as_rows())
    return image.dim, image.projection_dims()


@dataclass(frozen=True)
class BreadthReport:
    total: int
    pairs: frozenset = field(default_factory=frozenset)
    witness: tuple | None = None
    method: str = ORACLE
    classifier_case: str | None = None
    caveat: str | None = None
    at_least: bool = False
    oracle: BreadthReport | None = None

    @property
    def pair(self) -> GradedDim | None:
        """The unique pair, if there is one."""
        return next(iter(self.pairs)) if len(self.pairs) == 1 else None

    def describe(self) -> str:
        if self.at_least:
            return f">={self.total}"
        if self.pair is not None:
            return str(self.pair)
        return f"{self.total} pairs {sorted(map(str, self.pairs))}"


def _maps(L: LieSuperAlgebra) -> AdjointMaps:
    return AdjointMaps(np.asarray(L.array), L.field.p)


def breadth_bruteforce(L: LieSuperAlgebra, jobs: int = 1, collect: bool = False) -> BreadthReport:
    """Max rank of ad_x over every element (one representative per line)."""
    if not L.field.is_prime:
        raise UnsupportedMethod("the breadth oracle enumerates elements and needs a prime field")
    res = max_rank_scan(_maps(L), L.n, L.field.p, L.split, collect=collect, jobs=jobs)
    return BreadthReport(res.total, frozenset(res.pairs), res.witness, ORACLE)


def all_maximizers(L: LieSuperAlgebra, jobs: int = 1) -> list[tuple]:
    if not L.field.is_prime:
        raise UnsupportedMethod("the breadth oracle enumerates elements and needs a prime field")
    return max_rank_scan(_maps(L), L.n, L.field.p, L.split, collect=True, jobs=jobs).maximizers


def homogeneous_breadth(L: LieSuperAlgebra) -> int:
    """Max rank over purely even or purely odd elements: a lower bound for b(L)."""
    if not L.field.is_prime:
        # over Q only the basis vectors are tried
        return max((element_breadth(L, L.basis_vector(i))[0] for i in range(L.n)), default=0)
    best = 0
    s = L.split
    for lo, hi in ((0, s), (s, L.n)):
        if hi == lo:
            continue
        sub = np.asarray(L.array)[lo:hi]
        res = max_rank_scan(AdjointMaps(sub, L.field.p), hi - lo, L.field.p, L.split)
        best = max(best, res.total)
    return best


def _decide(P: InvariantProfile) -> tuple[str, int, GradedDim | None, str | None]:
    d, q = P.derived_dims, P.quotient_center_dims
    if d == GradedDim(0, 0):
        return "abelian", 0, GradedDim(0, 0), None
    if d.total() == 1:
        return "derived-1", 1, d, None
    if d in (GradedDim(2, 0), GradedDim(0, 2), GradedDim(1, 1)):
        return {GradedDim(2, 0): "M1(i)", GradedDim(0, 2): "M2", GradedDim(1, 1): "M3(i)"}[d], 2, d, None
    if d == GradedDim(3, 0) and q in (GradedDim(0, 2), GradedDim(3, 0)):
        return ("M1(ii)" if q == GradedDim(0, 2) else "M1(iii)"), 2, GradedDim(2, 0), None
    if d == GradedDim(1, 2) and q == GradedDim(1, 2) and P.odd_square_vanishes:
        return "M3(ii)", 2, GradedDim(1, 1), M3_CAVEAT
    return "at-least-three", 3, None, None


def breadth_classify(L: LieSuperAlgebra) -> BreadthReport:
    """Breadth read off the derived algebra and L/Z(L) by the classification theorems."""
    if not is_nilpotent(L)[0]:
        raise NotNilpotent("the classification applies to nilpotent algebras only")
    case, total, pair, caveat = _decide(profile(L))
    return BreadthReport(total, frozenset([pair]) if pair is not None else frozenset(), None,
                         CLASSIFIER, case, caveat, at_least=pair is None)


def breadth_both(L: LieSuperAlgebra, jobs: int = 1) -> BreadthReport:
    c = breadth_classify(L)
    o = breadth_bruteforce(L, jobs=jobs)
    return BreadthReport(c.total, c.pairs, o.witness, BOTH, c.classifier_case, c.caveat, c.at_least, o)


@dataclass(frozen=True)
class CrossCheck:
    agree: bool
    classifier: BreadthReport
    oracle: BreadthReport
    details: str = ""

    def __bool__(self) -> bool:
        return self.agree


def cross_check(L: LieSuperAlgebra, jobs: int = 1) -> CrossCheck:
    """Agree iff the oracle matches the classifier's total (and contains its pair)."""
    c = breadth_classify(L)
    o = breadth_bruteforce(L, jobs=jobs)
    if c.at_least:
        ok = o.total >= 3
    else:
        ok = o.total == c.total and c.pair in o.pairs
    details = "" if ok else (f"classifier {c.describe()} ({c.classifier_case}) vs oracle "
                             f"{o.total} pairs {sorted(map(str, o.pairs))} witness {o.witness}")
    return CrossCheck(ok, c, o, details)


def ranks_of(L: LieSuperAlgebra, xs: Sequence[Sequence]) -> list[int]:
    """Batch ranks of ad_x for explicit elements (prime fields)."""
    X = np.array(xs, dtype=np.int64).reshape(len(xs), L.n)
    return [int(r) for r in batch_rank(_maps(L)(X), L.field.p)]
