"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``.  Findings are appended to
``findings.log`` in the repository root (override with ``LSB_FINDINGS``).
"""

import os
import random
import time
from pathlib import Path

import numpy as np
import pytest

from lsb.breadth import all_maximizers, breadth_bruteforce, breadth_classify, cross_check, homogeneous_breadth
from lsb.catalog import acceptance_catalog
from lsb.cli import run
from lsb.corpus import CorpusConfig, corpus
from lsb.exactlin import F5, GradedDim
from lsb.invariants import center, derived_subalgebra, is_abelian_ideal, maximal_abelian_ideals, profile
from lsb.laws import CAVEAT_LAWS, FAILS, LAWS, append_finding, check_law, hypotheses_met
from lsb.breadth import M3_CAVEAT
from lsb.superalg import bracket, verify_axioms

from helpers import extensions_outside, mutate

G = GradedDim
ROOT = Path(__file__).resolve().parent.parent
FINDINGS = Path(os.environ.get("LSB_FINDINGS", ROOT / "findings.log"))

EXPECTED = {
    "A(0,0)": (0, G(0, 0), None), "A(2,1)": (0, G(0, 0), None),
    **{f"He({m},{n},0,0)": (1, G(1, 0), None) for m in range(3) for n in range(3) if m + n},
    **{f"Ho({m},0,0)": (1, G(0, 1), None) for m in (1, 2, 3)},
    "B1": (2, G(2, 0), None), "B2": (2, G(2, 0), G(0, 2)), "B3": (2, G(2, 0), G(3, 0)),
    "B4": (2, G(0, 2), None), "B5": (2, G(1, 1), None),
}


def report(capsys, n, ok, detail):
    with capsys.disabled():
        print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")


@pytest.fixture(scope="module")
def catalog():
    return acceptance_catalog(F5)


@pytest.fixture(scope="module")
def corpus_algebras():
    return corpus(CorpusConfig())


@pytest.fixture(scope="module")
def corpus_oracles(corpus_algebras):
    return {seed: breadth_bruteforce(L, collect=True) for seed, L in corpus_algebras}


@pytest.fixture(scope="module")
def corpus_laws(corpus_algebras):
    return {seed: {law: check_law(L, law) for law in LAWS} for seed, L in corpus_algebras}


def test_criterion_1_catalog_agreement(capsys, catalog):
    t0 = time.perf_counter()
    bad = []
    for label, L in catalog.items():
        res = cross_check(L)
        total, pair, quotient = EXPECTED[label]
        ok = (res.agree and res.oracle.total == total and res.oracle.pairs == {pair}
              and res.classifier.total == total and res.classifier.pair == pair)
        if quotient is not None:
            ok = ok and profile(L).quotient_center_dims == quotient
        if not ok:
            bad.append(f"{label}: {res.details or res.oracle.describe()}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 10
    report(capsys, 1, ok, f"{len(catalog)} catalog algebras, {len(bad)} mismatches, {dt:.1f}s (cap 10s)"
           + (f"; {bad}" if bad else ""))
    assert ok, bad


def test_criterion_2_corpus_equivalence(capsys, corpus_algebras):
    t0 = time.perf_counter()
    offending = []
    for seed, L in corpus_algebras:
        c = breadth_classify(L)
        o = breadth_bruteforce(L)
        broken = (not c.at_least and c.total <= 2 and o.total != c.total) or (o.total <= 2 and c.at_least)
        if broken:
            excused = c.caveat == M3_CAVEAT
            append_finding(FINDINGS, "corpus-disagree",
                           {"seed": seed, "field": L.field, "classifier": f"{c.describe()} ({c.classifier_case})",
                            "oracle": f"{o.total} pairs {sorted(map(str, o.pairs))} witness {o.witness}",
                            "caveat_route": excused}, L)
            if not excused:
                offending.append(seed)
    dt = time.perf_counter() - t0
    ok = not offending and dt < 300
    report(capsys, 2, ok, f"{len(corpus_algebras)} corpus algebras, unexcused disagreements at seeds "
           f"{offending}, {dt:.1f}s (cap 300s)")
    assert ok, f"disagreements outside the caveat clause: seeds {offending} (see findings.log)"


def test_criterion_3_law_suite(capsys, catalog, corpus_laws):
    t0 = time.perf_counter()
    failures = []
    met = {law: 0 for law in LAWS}
    for label, L in catalog.items():
        for law in LAWS:
            v = check_law(L, law)
            met[law] += hypotheses_met(v)
            if v.outcome != FAILS:
                continue
            caveat = law in CAVEAT_LAWS and breadth_classify(L).caveat == M3_CAVEAT
            append_finding(FINDINGS, "law-fails", {"law": law, "algebra": label, "field": L.field,
                                                    "caveat_route": caveat, "witness": v.witness})
            if not caveat:
                failures.append(f"{law} on {label}")
    for verdicts in corpus_laws.values():
        for law, v in verdicts.items():
            met[law] += hypotheses_met(v)
    required = ["L2-abelian", "P2-breadth1", "T2-structure1", "T2-centerbound", "T4-M1", "T4-M2"]
    untested = [law for law in required if not met[law]]
    with capsys.disabled():
        print("\nvacuity report (catalog + corpus, hypotheses satisfied):")
        for law, k in met.items():
            print(f"  {law:15s} {k:4d}{'  untested' if not k else ''}")
    ok = not failures and not untested
    report(capsys, 3, ok, f"catalog failures {failures}, required laws never exercised {untested}, "
           f"{time.perf_counter() - t0:.1f}s")
    assert ok, f"failures {failures}; untested {untested}"


def _centerbound_violations(L, maximizers, total):
    qdim = L.n - center(L).dim
    out = []
    for x in maximizers:
        sq = bracket(L, x, x)
        need = total if any(sq) else total + 1
        if qdim < need:
            out.append(x)
    return out


def test_criterion_4_center_bound(capsys, catalog, corpus_algebras, corpus_oracles):
    checked, bad = 0, []
    items = [(label, L, None) for label, L in catalog.items()] + \
        [(f"seed {s}", L, corpus_oracles[s]) for s, L in corpus_algebras]
    for label, L, rep in items:
        rep = rep or breadth_bruteforce(L, collect=True)
        if rep.total < 1:
            continue
        checked += 1
        xs = all_maximizers(L)
        if _centerbound_violations(L, xs, rep.total):
            bad.append(label)
    ok = not bad
    report(capsys, 4, ok, f"{checked} algebras with b >= 1, every maximizer checked, violations {bad}")
    assert ok


def test_criterion_5_oracle_consistency(capsys, corpus_algebras, corpus_oracles):
    bad = []
    for seed, L in corpus_algebras:
        o = corpus_oracles[seed].total
        if o > derived_subalgebra(L).dim or homogeneous_breadth(L) > o:
            bad.append(seed)
    ok = not bad
    report(capsys, 5, ok, f"{len(corpus_algebras)} corpus algebras, violations {bad}")
    assert ok


def test_criterion_6_maximal_abelian_ideals(capsys, catalog, corpus_algebras):
    items = list(catalog.items()) + [(f"seed {s}", L) for s, L in corpus_algebras]
    count, bad = 0, []
    for label, L in items:
        if L.n > 6:
            continue
        Z = center(L)
        for A in maximal_abelian_ideals(L):
            count += 1
            if not (is_abelian_ideal(L, A) and Z.issubset(A)) or len(extensions_outside(L, list(A.basis))):
                bad.append(label)
    he = [A for A in maximal_abelian_ideals(catalog["He(1,0,0,0)"]) if A.graded == G(2, 0)]
    ok = not bad and len(he) >= 2
    report(capsys, 6, ok, f"{count} ideals verified by full enumeration, failures {bad}, "
           f"Heisenberg has {len(he)} ideals of dims (2,0)")
    assert ok


def test_criterion_7_inhabitation_search(capsys):
    t0 = time.perf_counter()
    out, _ = run(["search", "--derived", "1,2", "--quotient", "1,2", "--odd-square-zero", "--field", "3",
                  "--max-total", "6", "--findings", str(FINDINGS), "--machine"])
    kv = dict(line.split("=", 1) for line in out.render(True).splitlines() if "=" in line)
    dt = time.perf_counter() - t0
    ok = out.code == 0 and kv.get("outcome") in ("Witness", "Empty") and "candidates" in kv and dt < 1800
    report(capsys, 7, ok, f"outcome {kv.get('outcome')} after {kv.get('candidates')} candidates, {dt:.1f}s "
           f"(recorded in {FINDINGS.name})")
    assert ok


def _mutations(catalog, count=20, seed=2024):
    rng = random.Random(seed)
    pool = [(k, L) for k, L in catalog.items() if L.n >= 2 and L.dims.odd and L.dims.even]
    out = []
    while len(out) < count:
        label, L = rng.choice(pool)
        kind = ("grading", "skew-symmetry")[len(out) % 2]
        i, j = rng.randrange(L.n), rng.randrange(L.n)
        want = (L.parity(i) + L.parity(j)) % 2
        ks = [k for k in range(L.n) if (L.parity(k) != want) == (kind == "grading")]
        if not ks or (kind == "skew-symmetry" and i == j and L.parity(i)):
            continue
        k = rng.choice(ks)
        new = (L.sc[i][j][k] + rng.randrange(1, L.field.p)) % L.field.p
        out.append((label, kind, mutate(L, i, j, k, new)))
    return out


def test_criterion_8_mutation_robustness(capsys, catalog):
    bad = []
    muts = _mutations(catalog)
    for label, kind, M in muts:
        rep = verify_axioms(M)
        if rep.axioms_ok or rep.violation.axiom != kind:
            bad.append((label, kind))
    ok = not bad and len(muts) == 20
    report(capsys, 8, ok, f"{len(muts)} seeded mutations, undetected or misnamed {bad}")
    assert ok
