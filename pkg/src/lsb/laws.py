"""Registry of checkable statements (hypotheses -> conclusion) about a single algebra.

Breadth hypotheses use oracle semantics: "b(L) = (p, q)" holds iff the oracle
total is p + q and every total-maximizer has pair (p, q).  Statements about
"a maximal abelian ideal A" are checked against every ideal returned by
:func:`maximal_abelian_ideals`; the verdict is the conjunction.
"""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Callable

import numpy as np

from .breadth import BreadthReport, all_maximizers, breadth_bruteforce
from .catalog import match_breadth_one_normal_form
from .enumeration import AdjointMaps, projective_block
from .errors import LsbError, UnsupportedMethod
from .exactlin import GradedDim, Subspace, batch_rank
from .invariants import (IdealBreadthReport, InvariantProfile, bracket_space, centralizer, ideal_breadth,
                         ideal_kernel, maximal_abelian_ideals, profile, whole)
from .lsafile import serialize
from .superalg import LieSuperAlgebra, is_nilpotent

HOLDS, VACUOUS, FAILS = "Holds", "Vacuous", "Fails"

G = GradedDim


class UnknownLaw(LsbError, KeyError):
    pass


@dataclass(frozen=True)
class LawVerdict:
    outcome: str
    witness: str | None = None
    hypotheses_log: tuple = ()

    def __post_init__(self):
        if (self.outcome == FAILS) != (self.witness is not None):
            raise ValueError("a witness accompanies exactly the failing verdicts")

    @property
    def ok(self) -> bool:
        return self.outcome != FAILS


# ---------------------------------------------------------------------------
# cached facts about one algebra


def pair_is(rep: BreadthReport | IdealBreadthReport, pair: GradedDim) -> bool:
    return rep.total == pair.total() and set(rep.pairs) == {pair}


def single_pair(rep) -> GradedDim | None:
    return next(iter(rep.pairs)) if len(rep.pairs) == 1 else None


def _basis_str(L: LieSuperAlgebra, S: Subspace) -> str:
    def elt(v):
        terms = [f"{c}*{L.names[k]}" if c != 1 else L.names[k] for k, c in enumerate(v) if c != 0]
        return " + ".join(terms) or "0"
    return "span{" + ", ".join(elt(b) for b in S.basis) + "}"


def _elt_str(L: LieSuperAlgebra, v) -> str:
    return _basis_str(L, Subspace(L.field, L.n, (tuple(v),)))[5:-1]


class IdealFacts:
    def __init__(self, F: Facts, A: Subspace):
        self.F, self.L, self.A = F, F.L, A

    @cached_property
    def C(self) -> Subspace:
        return centralizer(self.L, self.A)

    @cached_property
    def ba(self) -> IdealBreadthReport:
        return ideal_breadth(self.L, self.A)

    @cached_property
    def common_kernel(self) -> bool:
        return _common_kernel(self)

    @cached_property
    def c_abelian(self) -> bool:
        return bracket_space(self.L, self.C, self.C).dim == 0

    @property
    def dim_l_over_c(self) -> int:
        return self.L.n - self.C.dim

    @property
    def dim_c_over_a(self) -> int:
        return self.C.dim - self.A.dim

    @property
    def dim_a_over_z(self) -> GradedDim:
        return self.A.graded - self.F.prof.center_dims

    def label(self) -> str:
        return f"A = {_basis_str(self.L, self.A)}"


class Facts:
    """Lazily computed invariants shared by all law checks on one algebra."""

    def __init__(self, L: LieSuperAlgebra):
        if not L.field.is_prime:
            raise UnsupportedMethod("law checks evaluate breadth hypotheses by enumeration; use a prime field")
        self.L = L
        self._ideal: dict = {}

    @cached_property
    def nilpotent(self) -> bool:
        return is_nilpotent(self.L)[0]

    @cached_property
    def oracle(self) -> BreadthReport:
        return breadth_bruteforce(self.L)

    @cached_property
    def prof(self) -> InvariantProfile:
        return profile(self.L)

    @property
    def derived(self) -> GradedDim:
        return self.prof.derived_dims

    @property
    def quotient(self) -> GradedDim:
        return self.prof.quotient_center_dims

    @cached_property
    def ideals(self) -> list[IdealFacts]:
        return [self.ideal(A) for A in maximal_abelian_ideals(self.L)]

    def ideal(self, A: Subspace) -> IdealFacts:
        if A not in self._ideal:
            self._ideal[A] = IdealFacts(self, A)
        return self._ideal[A]

    def b_is(self, pair: GradedDim) -> bool:
        return pair_is(self.oracle, pair)

    @property
    def b_pair(self) -> GradedDim | None:
        return single_pair(self.oracle)


@lru_cache(maxsize=64)
def facts(L: LieSuperAlgebra) -> Facts:
    return Facts(L)


# ---------------------------------------------------------------------------
# law bodies


class _Run:
    """Accumulates the hypotheses log and produces a verdict."""

    def __init__(self, F: Facts):
        self.F = F
        self.log: list[tuple[str, bool]] = []
        self.satisfied = False

    def hyp(self, name: str, value: bool) -> bool:
        self.log.append((name, bool(value)))
        return bool(value)

    def fail(self, why: str) -> LawVerdict:
        w = f"{why}\n{serialize(self.F.L)}"
        return LawVerdict(FAILS, w, tuple(self.log))

    def done(self) -> LawVerdict:
        return LawVerdict(HOLDS if self.satisfied else VACUOUS, None, tuple(self.log))


def _biconditional(F: Facts, left_name: str, left: bool, right_name: str, right: bool) -> LawVerdict:
    r = _Run(F)
    r.hyp(left_name, left)
    r.hyp(right_name, right)
    if left != right:
        return r.fail(f"{left_name} is {left} but {right_name} is {right}")
    r.satisfied = left
    return r.done()


def _needs_nilpotent(F: Facts, r: _Run) -> bool:
    return r.hyp("nilpotent", F.nilpotent)


def _per_ideal(F: Facts, r: _Run, hyp: Callable[[IdealFacts], list[tuple[str, bool]]],
               concl: Callable[[IdealFacts], tuple[bool, str]]) -> LawVerdict:
    for k, I in enumerate(F.ideals):
        ok = True
        for name, val in hyp(I):
            ok = r.hyp(f"A{k}: {name}", val) and ok
            if not ok:
                break
        if not ok:
            continue
        r.satisfied = True
        good, detail = concl(I)
        if not good:
            return r.fail(f"{I.label()}: {detail}")
    return r.done()


def law_l2_abelian(F: Facts) -> LawVerdict:
    return _biconditional(F, "L abelian", F.L.is_abelian(), "b(L)=(0,0)", F.b_is(G(0, 0)))


def law_p2_breadth1(F: Facts) -> LawVerdict:
    return _biconditional(F, "b(L) total 1", F.oracle.total == 1, "dim[L,L] total 1", F.derived.total() == 1)


def law_t2_structure1(F: Facts) -> LawVerdict:
    r = _Run(F)
    label = match_breadth_one_normal_form(F.L)
    if not r.hyp("L is an H_e/H_o normal form plus abelian summand", label is not None):
        return r.done()
    r.satisfied = True
    want = G(1, 0) if label.startswith("He") else G(0, 1)
    if not F.b_is(want):
        return r.fail(f"{label} has oracle breadth {F.oracle.total} pairs {sorted(map(str, F.oracle.pairs))}")
    return r.done()


def _squares(L: LieSuperAlgebra, X: np.ndarray) -> np.ndarray:
    return np.einsum("bi,bj,ijk->bk", X, X, np.asarray(L.array)) % L.field.p


def law_t2_centerbound(F: Facts) -> LawVerdict:
    r = _Run(F)
    n = F.oracle.total
    if not r.hyp("b(L) total n > 0", n > 0):
        return r.done()
    r.satisfied = True
    q = F.quotient.total()
    X = np.array(all_maximizers(F.L), dtype=np.int64)
    sq = _squares(F.L, X).any(axis=1)
    for x, nonzero in zip(X, sq):
        need = n if nonzero else n + 1
        if q < need:
            return r.fail(f"maximizer {_elt_str(F.L, x)} has [x,x]{'!=' if nonzero else '='}0 "
                          f"but dim L/Z(L) = {q} < {need}")
    return r.done()


def law_l3_1(F: Facts) -> LawVerdict:
    r = _Run(F)
    p = F.b_pair
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(0,r), r>=2", p is not None and p.even == 0 and p.odd >= 2)):
        return r.done()
    return _per_ideal(F, r, lambda I: [],
                      lambda I: (I.C == I.A, f"C_L(A) = {_basis_str(F.L, I.C)} differs from A"))


def law_l3_2(F: Facts) -> LawVerdict:
    r = _Run(F)
    p = F.b_pair
    L = F.L
    if not (r.hyp("b(L)=(r,0), r>=2", p is not None and p.odd == 0 and p.even >= 2)
            and r.hyp("[L0,L0]=0", F.prof.derived_even_split[0] == 0)):
        return r.done()

    def concl(I: IdealFacts):
        s, P = L.dims.odd, L.field.p
        if s == 0:
            return True, ""
        _, Y = projective_block(s, P, 1, P ** s)
        X = np.zeros((len(Y), L.n), dtype=np.int64)
        X[:, L.split:] = Y
        Abasis = np.array(I.A.basis, dtype=np.int64).reshape(I.A.dim, L.n)
        stacked = np.concatenate([np.broadcast_to(Abasis, (len(X),) + Abasis.shape), X[:, None, :]], axis=1)
        outside = batch_rank(stacked, P) > I.A.dim
        zero_sq = ~_squares(L, X).any(axis=1)
        bad = np.nonzero(outside & zero_sq)[0]
        if len(bad):
            return False, f"odd {_elt_str(L, X[bad[0]])} lies outside A with [x,x]=0"
        return True, ""

    return _per_ideal(F, r, lambda I: [], concl)


def law_l3_3(F: Facts) -> LawVerdict:
    r = _Run(F)
    p = F.b_pair
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(r,s), r>=1", p is not None and p.even >= 1)):
        return r.done()
    return _per_ideal(F, r, lambda I: [("b_A(L)=(0,0)", I.ba.total == 0)],
                      lambda I: (F.prof.derived_even_split[0] == 0, "[L0,L0] != 0"))


def law_p3_4(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(2,0)", F.b_is(G(2, 0)))):
        return r.done()
    ok = F.derived == G(2, 0) or (F.derived == G(3, 0) and F.quotient == G(0, 2))
    return _per_ideal(F, r, lambda I: [("b_A(L)=(0,0)", I.ba.total == 0)],
                      lambda I: (ok, f"dim[L,L]={F.derived}, dim L/Z(L)={F.quotient}"))


def law_p3_5(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(0,2)", F.b_is(G(0, 2)))):
        return r.done()
    return _per_ideal(F, r, lambda I: [("b_A(L)=(0,0)", I.ba.total == 0)],
                      lambda I: (False, "a maximal abelian ideal with b_A(L)=(0,0) exists"))


def law_l3_6(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(1,1)", F.b_is(G(1, 1)))):
        return r.done()
    r.satisfied = True
    if G(1, 1) not in F.oracle.pairs:
        return r.fail("no element has b(x)=(1,1)")
    return r.done()


def law_p3_7(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(1,1)", F.b_is(G(1, 1)))):
        return r.done()
    ok = F.derived == G(1, 1) or (F.derived == G(1, 2) and F.quotient == G(1, 2)
                                  and F.prof.odd_square_vanishes)
    return _per_ideal(F, r, lambda I: [("b_A(L)=(0,0)", I.ba.total == 0)],
                      lambda I: (ok, f"dim[L,L]={F.derived}, dim L/Z(L)={F.quotient}, "
                                     f"odd squares vanish={F.prof.odd_square_vanishes}"))


def _maps(L: LieSuperAlgebra, S: Subspace | None) -> AdjointMaps:
    right = None if S is None else np.array(S.basis, dtype=np.int64).reshape(S.dim, L.n)
    return AdjointMaps(np.asarray(L.array), L.field.p, right)


def _all_elements(L: LieSuperAlgebra) -> np.ndarray:
    P = L.field.p
    return projective_block(L.n, P, 1, P ** L.n)[1]


def _common_kernel(I: IdealFacts) -> bool:
    """ker ad_x|_A is the same subspace for every x outside C_L(A)."""
    L = I.L
    if I.ba.total == 0:
        return True
    K0 = ideal_kernel(L, I.A, I.ba.witness)
    X = _all_elements(L)
    P = L.field.p
    rA = batch_rank(_maps(L, I.A)(X), P)
    outside = rA > 0
    if K0.dim:
        kills = ~(_maps(L, K0)(X) % P).reshape(len(X), -1).any(axis=1)
    else:
        kills = np.ones(len(X), dtype=bool)
    same = kills & (rA == I.A.dim - K0.dim)
    return bool(np.all(same[outside]))


def _p3_8_hyp(I: IdealFacts):
    return [("b_A(L) total 1", I.ba.total == 1), ("common kernel of ad_x|_A off C_L(A)", I.common_kernel)]


def _t_a(I: IdealFacts) -> np.ndarray:
    X = _all_elements(I.L)
    return X[batch_rank(_maps(I.L, I.A)(X), I.L.field.p) == 1]


def law_p3_8i(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not _needs_nilpotent(F, r):
        return r.done()

    def concl(I: IdealFacts):
        if I.dim_a_over_z.total() != 1:
            return False, f"dim A/Z(L) = {I.dim_a_over_z}"
        Z = F.prof.center
        if not Z.issubset(I.A):
            return False, "Z(L) is not inside A"
        # C_A(z) contains Z(L) and has dimension dim A - b_A(z) = dim A - 1 on T_A
        if I.A.dim - 1 != Z.dim:
            return False, "C_A(z) != Z(L) for z in T_A"
        return True, ""

    return _per_ideal(F, r, _p3_8_hyp, concl)


def _m_rank(I: IdealFacts, Z: np.ndarray) -> np.ndarray:
    """rank of ad_z restricted to C_L(A); dim M_z = dim L - b(z) + this."""
    return batch_rank(_maps(I.L, I.C)(Z), I.L.field.p)


def law_p3_8ii(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not _needs_nilpotent(F, r):
        return r.done()

    def hyp(I):
        return _p3_8_hyp(I) + [("C_L(A) abelian", I.c_abelian)]

    def concl(I: IdealFacts):
        T = _t_a(I)
        bad = np.nonzero(_m_rank(I, T) != 1)[0]
        if len(bad):
            return False, f"dim M_z != dim L + 1 - b(z) at z = {_elt_str(F.L, T[bad[0]])}"
        return True, ""

    return _per_ideal(F, r, hyp, concl)


def law_p3_8iii(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not _needs_nilpotent(F, r):
        return r.done()

    def hyp(I):
        return _p3_8_hyp(I) + [("C_L(A) non-abelian", not I.c_abelian)]

    def concl(I: IdealFacts):
        T = _t_a(I)
        bad = np.nonzero(_m_rank(I, T) < 1)[0]
        if len(bad):
            return False, f"dim M_z <= dim L - b(z) at z = {_elt_str(F.L, T[bad[0]])}"
        return True, ""

    return _per_ideal(F, r, hyp, concl)


def _p3_9_like(F: Facts, b_name: str, b_ok: bool, ba_name: str, ba_ok: Callable[[IdealFacts], bool],
               target: GradedDim) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp(b_name, b_ok)):
        return r.done()

    def hyp(I):
        return [(ba_name, ba_ok(I)), ("C_L(A) non-abelian", not I.c_abelian),
                ("dim L/C_L(A)=1", I.dim_l_over_c == 1)]

    def concl(I: IdealFacts):
        if I.dim_c_over_a == 1 and F.L.n - I.A.dim != 2:
            return False, f"(i): dim C_L(A)/A = 1 but dim L/A = {F.L.n - I.A.dim}"
        if I.dim_c_over_a >= 2 and F.derived != target:
            return False, f"(ii): dim C_L(A)/A = {I.dim_c_over_a} but dim[L,L] = {F.derived}"
        return True, ""

    return _per_ideal(F, r, hyp, concl)


def law_p3_9(F: Facts) -> LawVerdict:
    return _p3_9_like(F, "b(L)=(2,0)", F.b_is(G(2, 0)), "b_A(L)=(1,0)", lambda I: pair_is(I.ba, G(1, 0)), G(2, 0))


def law_p3_10(F: Facts) -> LawVerdict:
    return _p3_9_like(F, "b(L)=(1,1)", F.b_is(G(1, 1)), "b_A(L) total 1", lambda I: I.ba.total == 1, G(1, 1))


def law_p3_11(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=2", F.oracle.total == 2)):
        return r.done()
    return _per_ideal(F, r, lambda I: [("b_A(L)=1", I.ba.total == 1), ("dim L/C_L(A)>=2", I.dim_l_over_c >= 2)],
                      lambda I: (F.derived.total() == 2, f"dim[L,L] = {F.derived.total()}"))


def law_p3_12(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(2,0)", F.b_is(G(2, 0)))):
        return r.done()

    def concl(I):
        ok = (I.dim_a_over_z.total() == 1 and F.quotient.total() <= 3) or F.derived == G(2, 0)
        return ok, f"dim A/Z(L)={I.dim_a_over_z}, dim L/Z(L)={F.quotient}, dim[L,L]={F.derived}"

    return _per_ideal(F, r, lambda I: [("b_A(L)=(1,0)", pair_is(I.ba, G(1, 0)))], concl)


def law_p3_13(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(0,2)", F.b_is(G(0, 2)))):
        return r.done()
    return _per_ideal(F, r, lambda I: [("b_A(L)=(0,1)", pair_is(I.ba, G(0, 1)))],
                      lambda I: (F.derived == G(0, 2), f"dim[L,L]={F.derived}"))


def law_p3_14(F: Facts) -> LawVerdict:
    r = _Run(F)
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(1,1)", F.b_is(G(1, 1)))):
        return r.done()

    def hyp(I):
        return [("b_A(L)=(r,s), r+s=1", I.ba.total == 1 and single_pair(I.ba) is not None)]

    def concl(I):
        ok = (I.dim_a_over_z == single_pair(I.ba) and F.quotient.total() <= 3) or F.derived == G(1, 1)
        return ok, f"dim A/Z(L)={I.dim_a_over_z}, b_A(L)={single_pair(I.ba)}, dim L/Z(L)={F.quotient}, dim[L,L]={F.derived}"

    return _per_ideal(F, r, hyp, concl)


def _equal_breadths(F: Facts, r: _Run) -> GradedDim | None:
    p = F.b_pair
    if not (_needs_nilpotent(F, r) and r.hyp("b(L)=(r,s), r+s=2", p is not None and F.oracle.total == 2)):
        return None
    return p


def law_l3_15(F: Facts) -> LawVerdict:
    r = _Run(F)
    p = _equal_breadths(F, r)
    if p is None:
        return r.done()

    def concl(I):
        S = bracket_space(F.L, I.C, whole(F.L))
        return S.graded == p, f"dim[C_L(A),L] = {S.graded}"

    return _per_ideal(F, r, lambda I: [("b_A(L)=b(L)", pair_is(I.ba, p))], concl)


def law_p3_16(F: Facts) -> LawVerdict:
    r = _Run(F)
    p = _equal_breadths(F, r)
    if p is None:
        return r.done()
    return _per_ideal(F, r, lambda I: [("b_A(L)=b(L)", pair_is(I.ba, p))],
                      lambda I: (F.derived == p, f"dim[L,L] = {F.derived}"))


def _m_theorem(F: Facts, pair: GradedDim, right_name: str, right: bool) -> LawVerdict:
    if not F.nilpotent:
        return LawVerdict(VACUOUS, None, (("nilpotent", False),))
    v = _biconditional(F, f"b(L)={pair}", F.b_is(pair), right_name, right)
    return LawVerdict(v.outcome, v.witness, (("nilpotent", True),) + v.hypotheses_log)


def law_t4_m1(F: Facts) -> LawVerdict:
    d, q = F.derived, F.quotient
    right = d == G(2, 0) or (d == G(3, 0) and q in (G(0, 2), G(3, 0)))
    return _m_theorem(F, G(2, 0), "dim[L,L]=(2,0), or (3,0) with dim L/Z(L) in {(0,2),(3,0)}", right)


def law_t4_m2(F: Facts) -> LawVerdict:
    return _m_theorem(F, G(0, 2), "dim[L,L]=(0,2)", F.derived == G(0, 2))


def law_t4_m3(F: Facts) -> LawVerdict:
    d, q = F.derived, F.quotient
    right = d == G(1, 1) or (d == G(1, 2) and q == G(1, 2) and F.prof.odd_square_vanishes)
    return _m_theorem(F, G(1, 1), "dim[L,L]=(1,1), or (1,2) with dim L/Z(L)=(1,2) and no [w,w]!=0", right)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Law:
    id: str
    statement: str
    check: Callable[[Facts], LawVerdict] = field(repr=False)
    note: str = ""


LAWS: dict[str, Law] = {law.id: law for law in [
    Law("L2-abelian", "L is abelian iff b(L)=(0,0)", law_l2_abelian),
    Law("P2-breadth1", "b(L) has total 1 iff dim[L,L] has total 1", law_p2_breadth1),
    Law("T2-structure1", "H_e and H_o normal forms (plus abelian summands) have breadth (1,0) and (0,1)",
        law_t2_structure1, note="forward direction only; the converse needs isomorphism testing"),
    Law("T2-centerbound", "a maximizer x with [x,x]!=0 gives dim L/Z(L) >= b(L), else >= b(L)+1",
        law_t2_centerbound, note="checked for every maximizer"),
    Law("L3-1", "b(L)=(0,r), r>=2, A maximal abelian => C_L(A)=A", law_l3_1),
    Law("L3-2", "b(L)=(r,0), r>=2, [L0,L0]=0 => [x,x]!=0 for odd x outside A", law_l3_2),
    Law("L3-3", "b(L)=(r,s), r>=1, b_A(L)=(0,0) => [L0,L0]=0", law_l3_3),
    Law("P3-4", "b(L)=(2,0), b_A(L)=(0,0) => dim[L,L]=(2,0) or ((3,0) and dim L/Z(L)=(0,2))", law_p3_4),
    Law("P3-5", "no nilpotent L with b(L)=(0,2) has a maximal abelian A with b_A(L)=(0,0)", law_p3_5),
    Law("L3-6", "b(L)=(1,1) => some x has b(x)=(1,1)", law_l3_6),
    Law("P3-7", "b(L)=(1,1), b_A(L)=(0,0) => dim[L,L]=(1,1) or the (1,2)/(1,2)/no-square clause", law_p3_7),
    Law("P3-8i", "b_A(L) total 1 with a common kernel off C_L(A) => dim A/Z(L) total 1 and C_A(z)=Z(L) on T_A",
        law_p3_8i),
    Law("P3-8ii", "same, C_L(A) abelian => dim M_z = dim L + 1 - b(z) on T_A", law_p3_8ii),
    Law("P3-8iii", "same, C_L(A) non-abelian => dim M_z > dim L - b(z) on T_A", law_p3_8iii),
    Law("P3-9", "b(L)=(2,0), b_A(L)=(1,0), C_L(A) non-abelian, dim L/C_L(A)=1 => (i) and (ii)", law_p3_9,
        note="parts (i) and (ii) checked together"),
    Law("P3-10", "the (1,1) analogue of P3-9", law_p3_10, note="parts (i) and (ii) checked together"),
    Law("P3-11", "b(L)=2, b_A(L)=1, dim L/C_L(A)>=2 => dim[L,L]=2", law_p3_11),
    Law("P3-12", "b(L)=(2,0), b_A(L)=(1,0) => (dim A/Z(L)=1 and dim L/Z(L)<=3) or dim[L,L]=(2,0)", law_p3_12),
    Law("P3-13", "b(L)=(0,2), b_A(L)=(0,1) => dim[L,L]=(0,2)", law_p3_13),
    Law("P3-14", "b(L)=(1,1), b_A(L)=(r,s), r+s=1 => (dim A/Z(L)=(r,s) and dim L/Z(L)<=3) or dim[L,L]=(1,1)",
        law_p3_14),
    Law("L3-15", "b(L)=b_A(L)=(r,s), r+s=2 => dim[C_L(A),L]=(r,s)", law_l3_15),
    Law("P3-16", "b(L)=b_A(L)=(r,s), r+s=2 => dim[L,L]=(r,s)", law_p3_16),
    Law("T4-M1", "b(L)=(2,0) iff dim[L,L]=(2,0) or (3,0) with dim L/Z(L) in {(0,2),(3,0)}", law_t4_m1),
    Law("T4-M2", "b(L)=(0,2) iff dim[L,L]=(0,2)", law_t4_m2),
    Law("T4-M3", "b(L)=(1,1) iff dim[L,L]=(1,1) or the (1,2)/(1,2)/no-square clause", law_t4_m3),
]}

CAVEAT_LAWS = ("T4-M3", "P3-7")


def list_laws() -> list[Law]:
    return list(LAWS.values())


def get_law(law_id: str) -> Law:
    try:
        return LAWS[law_id]
    except KeyError:
        raise UnknownLaw(f"unknown law {law_id!r}; known: {', '.join(LAWS)}") from None


def check_law(L: LieSuperAlgebra, law_id: str) -> LawVerdict:
    law = get_law(law_id)
    return law.check(facts(L))


def check_all(L: LieSuperAlgebra) -> dict[str, LawVerdict]:
    return {law_id: check_law(L, law_id) for law_id in LAWS}


def hypotheses_met(v: LawVerdict) -> bool:
    return v.outcome != VACUOUS


# ---------------------------------------------------------------------------
# findings log


def append_finding(path, kind: str, fields: dict, algebra: LieSuperAlgebra | None = None) -> None:
    """Append one record to the findings log."""
    stamp = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    lines = [f"=== {kind} {stamp}"]
    lines += [f"{k}: {v}" for k, v in fields.items()]
    if algebra is not None:
        lines.append("algebra:")
        lines += ["  " + ln for ln in serialize(algebra).splitlines()]
    lines.append("")
    with Path(path).open("a", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
