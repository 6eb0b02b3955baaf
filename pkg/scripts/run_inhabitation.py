"""Exhaustive inhabitation searches for the breadth-two classes.

Each line of output is one (derived, quotient, odd-square) target searched
over all two-step central extensions up to the size limit; results are also
appended to the findings log.

    python3 scripts/run_inhabitation.py --field 3 --max-total 6
"""

import argparse
import time

from lsb.exactlin import Field, GradedDim
from lsb.laws import append_finding
from lsb.search import SearchConstraints, inhabitation_search, witness_text

G = GradedDim

TARGETS = [
    SearchConstraints(G(1, 2), G(1, 2), odd_square_zero=True),
    SearchConstraints(G(1, 2), G(1, 2)),
    SearchConstraints(G(1, 2), G(2, 1), odd_square_zero=True),
    SearchConstraints(G(3, 0), G(0, 2)),
    SearchConstraints(G(3, 0), G(3, 0)),
    SearchConstraints(G(1, 1), G(1, 1)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--field", type=int, default=3)
    ap.add_argument("--max-total", type=int, default=6)
    ap.add_argument("--findings", default="findings.log")
    ap.add_argument("--show-witness", action="store_true")
    args = ap.parse_args()
    field = Field(args.field)
    for c in TARGETS:
        t0 = time.perf_counter()
        r = inhabitation_search(c, field, args.max_total)
        dt = time.perf_counter() - t0
        extra = f" base {r.base} center {r.center} cross-check {r.cross_check}" if r.found else ""
        print(f"derived {c.derived} quotient {c.quotient} odd-square-zero {c.odd_square_zero}: "
              f"{r.outcome} after {r.candidates} candidates ({dt:.1f}s){extra}")
        if r.found and args.show_witness:
            print(witness_text(r))
        append_finding(args.findings, "search", r.record(c, field, args.max_total), r.algebra)


if __name__ == "__main__":
    main()
