"""Cross-check and law sweep over the seeded corpus.

    python3 scripts/run_corpus.py --size 200 --findings findings.log
"""

import argparse
import time
from collections import Counter

from lsb.breadth import cross_check
from lsb.catalog import acceptance_catalog
from lsb.corpus import CorpusConfig, corpus
from lsb.exactlin import Field
from lsb.laws import FAILS, HOLDS, LAWS, append_finding, check_law


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=200)
    ap.add_argument("--first-seed", type=int, default=0)
    ap.add_argument("--field", type=int, default=5)
    ap.add_argument("--no-laws", action="store_true", help="cross-check only")
    ap.add_argument("--with-catalog", action="store_true", help="also sweep the catalog")
    ap.add_argument("--findings", default="findings.log")
    args = ap.parse_args()

    field = Field(args.field)
    items = [(f"seed {s}", L) for s, L in corpus(CorpusConfig(size=args.size, field=field,
                                                             first_seed=args.first_seed))]
    if args.with_catalog:
        items = list(acceptance_catalog(field).items()) + items

    t0 = time.perf_counter()
    disagree = []
    for label, L in items:
        res = cross_check(L)
        if not res.agree:
            disagree.append(label)
            append_finding(args.findings, "disagree", {"algebra": label, "details": res.details}, L)
    print(f"cross-check: {len(items) - len(disagree)}/{len(items)} agree "
          f"({time.perf_counter() - t0:.1f}s); disagreements: {disagree or 'none'}")
    if args.no_laws:
        return

    t0 = time.perf_counter()
    tally = {law: Counter() for law in LAWS}
    for label, L in items:
        for law in LAWS:
            v = check_law(L, law)
            tally[law][v.outcome] += 1
            if v.outcome == FAILS:
                append_finding(args.findings, "law-fails", {"law": law, "algebra": label, "witness": v.witness})
    print(f"laws ({time.perf_counter() - t0:.1f}s):")
    print(f"  {'law':15s} {'Holds':>6s} {'Vacuous':>8s} {'Fails':>6s}")
    for law, c in tally.items():
        flag = "  untested" if not c[HOLDS] and not c[FAILS] else ""
        print(f"  {law:15s} {c[HOLDS]:6d} {c['Vacuous']:8d} {c[FAILS]:6d}{flag}")


if __name__ == "__main__":
    main()
