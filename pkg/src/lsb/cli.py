"""Command-line front end (``lsb``).

Exit codes: 0 success / Holds / Vacuous / Agree; 1 Fails / Disagree / axiom
violation; 2 usage error (including non-nilpotent input to the classifier);
3 method unsupported over the algebra's field.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog
from .breadth import breadth_bruteforce, breadth_classify, cross_check
from .enumeration import default_jobs
from .errors import InvalidParams, LsbError, NotNilpotent, ParseError, SearchCapExceeded, UnsupportedMethod
from .exactlin import Field, GradedDim
from .invariants import maximal_abelian_ideals, profile
from .laws import FAILS, LAWS, UnknownLaw, append_finding, check_law
from .lsafile import load, serialize
from .search import SearchConstraints, inhabitation_search, witness_text
from .superalg import LieSuperAlgebra, is_nilpotent, random_two_step, verify_axioms

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


@dataclass
class CommandOutcome:
    code: int
    report: str
    machine: dict = field(default_factory=dict)

    def render(self, machine: bool) -> str:
        if machine:
            return "\n".join(f"{k}={v}" for k, v in self.machine.items())
        return self.report


def _elt(L: LieSuperAlgebra, v) -> str:
    if v is None:
        return "-"
    terms = [(f"{c}*" if c != 1 else "") + L.names[k] for k, c in enumerate(v) if c != 0]
    return " + ".join(terms) or "0"


def _pairs(ps) -> str:
    return ";".join(sorted(str(p) for p in ps))


def _basis(L: LieSuperAlgebra, S) -> str:
    return "{" + ", ".join(_elt(L, b) for b in S.basis) + "}"


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> CommandOutcome:
    try:
        L = load(args.file)
    except ParseError as exc:
        if exc.kind in ("sign-rule", "grading"):
            axiom = "skew-symmetry" if exc.kind == "sign-rule" else "grading"
            return CommandOutcome(EXIT_FAIL, f"axiom violation ({axiom}): {exc}",
                                  {"axioms_ok": "false", "axiom": axiom, "detail": str(exc)})
        raise
    rep = verify_axioms(L)
    if not rep.axioms_ok:
        v = rep.violation
        return CommandOutcome(EXIT_FAIL, f"axiom violation ({v.axiom}): {v}",
                              {"axioms_ok": "false", "axiom": v.axiom, "triple": ",".join(v.names)})
    nil, cls = is_nilpotent(L)
    return CommandOutcome(EXIT_OK, f"ok: {L}; nilpotent={nil}" + (f" class {cls}" if nil else ""),
                          {"axioms_ok": "true", "field": L.field, "dims": L.dims,
                           "nilpotent": str(nil).lower(), "nilpotency_class": cls if nil else "-"})


def _loaded(path) -> LieSuperAlgebra:
    L = load(path)
    rep = verify_axioms(L)
    if not rep.axioms_ok:
        raise _AxiomError(str(rep.violation))
    return L


class _AxiomError(Exception):
    pass


def cmd_invariants(args) -> CommandOutcome:
    L = _loaded(args.file)
    P = profile(L)
    nil, cls = is_nilpotent(L)
    m = {"field": L.field, "dims": L.dims, "derived": P.derived_dims, "center": P.center_dims,
         "quotient_center": P.quotient_center_dims,
         "odd_square_vanishes": str(P.odd_square_vanishes).lower(),
         "derived_split": ",".join(map(str, P.derived_even_split)),
         "nilpotent": str(nil).lower(), "nilpotency_class": cls if nil else "-"}
    lines = [f"algebra        {L}",
             f"[L,L]          {P.derived_dims}  {_basis(L, P.derived)}",
             f"Z(L)           {P.center_dims}  {_basis(L, P.center)}",
             f"L/Z(L)         {P.quotient_center_dims}",
             f"[L0,L0],[L1,L1],[L0,L1]  {P.derived_even_split}",
             f"odd squares vanish  {P.odd_square_vanishes}",
             f"nilpotent      {nil}" + (f" (class {cls})" if nil else "")]
    return CommandOutcome(EXIT_OK, "\n".join(lines), m)


def cmd_breadth(args) -> CommandOutcome:
    L = _loaded(args.file)
    jobs = args.jobs or default_jobs()
    m: dict = {"method": args.method}
    lines = []
    code = EXIT_OK
    if args.method in ("classify", "both"):
        c = breadth_classify(L)
        m.update(classifier_total=(">=3" if c.at_least else c.total), classifier_pair=c.pair or "-",
                 classifier_case=c.classifier_case, caveat=c.caveat or "-")
        lines.append(f"classifier: {c.describe()} via {c.classifier_case}" + (f" [caveat {c.caveat}]" if c.caveat else ""))
    if args.method in ("bruteforce", "both"):
        o = breadth_bruteforce(L, jobs=jobs)
        m.update(total=o.total, pairs=_pairs(o.pairs), pair=o.pair or "-", witness=_elt(L, o.witness))
        lines.append(f"oracle: total {o.total}, pairs {_pairs(o.pairs)}, witness {_elt(L, o.witness)}")
    else:
        m.update(total=(">=3" if c.at_least else c.total), pair=c.pair or "-")
    if args.method == "both":
        cc = cross_check(L, jobs=jobs)
        m["agree"] = str(cc.agree).lower()
        lines.append("agree" if cc.agree else f"DISAGREE: {cc.details}")
        if not cc.agree:
            code = EXIT_FAIL
            append_finding(args.findings, "breadth-disagree",
                           {"field": L.field, "classifier": cc.classifier.describe(),
                            "case": cc.classifier.classifier_case, "oracle_total": cc.oracle.total,
                            "oracle_pairs": _pairs(cc.oracle.pairs), "witness": cc.oracle.witness}, L)
    return CommandOutcome(code, "\n".join(lines), m)


def cmd_maximal_abelian(args) -> CommandOutcome:
    L = _loaded(args.file)
    M = maximal_abelian_ideals(L)
    m: dict = {"count": len(M), "confirmed": str(M.confirmed).lower()}
    lines = [f"{len(M)} maximal abelian ideal(s)" + ("" if M.confirmed else " (unconfirmed-maximality)")]
    for k, A in enumerate(M):
        m[f"ideal_{k}_dims"] = A.graded
        m[f"ideal_{k}"] = _basis(L, A)
        lines.append(f"  {A.graded}  {_basis(L, A)}")
    return CommandOutcome(EXIT_OK, "\n".join(lines), m)


def cmd_laws(args) -> CommandOutcome:
    L = _loaded(args.file)
    ids = list(LAWS) if args.law == "all" else [args.law]
    m: dict = {}
    lines = []
    code = EXIT_OK
    for law_id in ids:
        v = check_law(L, law_id)
        m[f"law_{law_id}"] = v.outcome
        lines.append(f"{law_id:15s} {v.outcome}")
        if v.outcome == FAILS:
            code = EXIT_FAIL
            lines.append("    " + v.witness.splitlines()[0])
            append_finding(args.findings, "law-fails",
                           {"law": law_id, "field": L.field, "detail": v.witness.splitlines()[0]}, L)
    if len(ids) == 1:
        m = {"law": ids[0], "outcome": m[f"law_{ids[0]}"]}
    return CommandOutcome(code, "\n".join(lines), m)


def _emit(L: LieSuperAlgebra, out) -> CommandOutcome:
    text = serialize(L)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        return CommandOutcome(EXIT_OK, f"wrote {out}", {"file": out, "dims": L.dims, "field": L.field})
    return CommandOutcome(EXIT_OK, text.rstrip("\n"), {"dims": L.dims, "field": L.field})


def cmd_catalog(args) -> CommandOutcome:
    L = catalog.catalog_build(args.name, Field(args.field), args.m, args.n, args.k0, args.k1)
    return _emit(L, args.output)


def cmd_random(args) -> CommandOutcome:
    L = random_two_step(args.seed, GradedDim(args.even, args.odd), GradedDim(args.center_even, args.center_odd),
                        Field(args.field))
    return _emit(L, args.output)


def cmd_search(args) -> CommandOutcome:
    c = SearchConstraints(args.derived, args.quotient, args.odd_square_zero)
    f = Field(args.field)
    r = inhabitation_search(c, f, args.max_total, cap=args.cap)
    rec = r.record(c, f, args.max_total)
    append_finding(args.findings, "inhabitation", rec, r.algebra)
    lines = [f"{r.outcome} after {r.candidates} candidate cocycles"]
    if r.found:
        lines += [f"base {r.base}, center {r.center}, cross-check {r.cross_check}", witness_text(r).rstrip()]
    return CommandOutcome(EXIT_OK, "\n".join(lines), {k: v for k, v in rec.items()})


# ---------------------------------------------------------------------------
# parser


def _pair(text: str) -> GradedDim:
    try:
        return GradedDim.parse(text)
    except (ValueError, LsbError) as exc:
        raise argparse.ArgumentTypeError(f"expected R,S, got {text!r}") from exc


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--machine", action="store_true", default=argparse.SUPPRESS,
                        help="print a key=value block instead of the report")
    common.add_argument("--findings", default=argparse.SUPPRESS, metavar="PATH",
                        help="findings log (default: findings.log)")
    p = _Parser(prog="lsb", description="Exact breadth computations for Lie superalgebras.", parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("verify", parents=[common], help="check the axioms and nilpotency")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("invariants", parents=[common], help="derived algebra, center, L/Z(L)")
    s.add_argument("file")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("breadth", parents=[common], help="superbreadth by oracle and/or classifier")
    s.add_argument("file")
    s.add_argument("--method", choices=("bruteforce", "classify", "both"), default="both")
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    s.set_defaults(func=cmd_breadth)

    s = sub.add_parser("maximal-abelian", parents=[common], help="maximal abelian ideals")
    s.add_argument("file")
    s.set_defaults(func=cmd_maximal_abelian)

    s = sub.add_parser("laws", parents=[common], help="check registry statements")
    s.add_argument("file")
    s.add_argument("--law", default="all", help="law id or 'all'")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("catalog", parents=[common], help="emit a catalog algebra")
    s.add_argument("name", help=f"one of {', '.join(catalog.FAMILIES)}")
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--k0", type=int, default=0)
    s.add_argument("--k1", type=int, default=0)
    s.add_argument("--field", type=int, default=5)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("random", parents=[common], help="emit a seeded random two-step algebra")
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--even", type=int, required=True)
    s.add_argument("--odd", type=int, required=True)
    s.add_argument("--center-even", type=int, required=True)
    s.add_argument("--center-odd", type=int, required=True)
    s.add_argument("--field", type=int, default=5)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_random)

    s = sub.add_parser("search", parents=[common], help="inhabitation search over two-step algebras")
    s.add_argument("--derived", type=_pair, required=True)
    s.add_argument("--quotient", type=_pair, required=True)
    s.add_argument("--odd-square-zero", action="store_true")
    s.add_argument("--field", type=int, default=3)
    s.add_argument("--max-total", type=int, default=6)
    s.add_argument("--cap", type=int, default=10 ** 8)
    s.set_defaults(func=cmd_search)
    return p


def run(argv: list[str] | None = None) -> tuple[CommandOutcome, bool]:
    argv = list(sys.argv[1:] if argv is None else argv)
    machine = "--machine" in argv
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        return CommandOutcome(EXIT_USAGE, f"usage error: {exc}", {"error": "usage", "message": exc}), machine
    if not hasattr(args, "findings"):
        args.findings = "findings.log"
    try:
        return args.func(args), machine
    except UnsupportedMethod as exc:
        return CommandOutcome(EXIT_UNSUPPORTED, f"unsupported: {exc}", {"error": "unsupported", "message": exc}), machine
    except NotNilpotent as exc:
        return CommandOutcome(EXIT_USAGE, f"precondition: {exc} (the input is not nilpotent)",
                              {"error": "not-nilpotent", "message": exc}), machine
    except _AxiomError as exc:
        return CommandOutcome(EXIT_FAIL, f"axiom violation: {exc}", {"error": "axioms", "message": exc}), machine
    except UnknownLaw as exc:
        return CommandOutcome(EXIT_USAGE, f"usage error: {exc.args[0]}", {"error": "usage", "message": exc.args[0]}), machine
    except (ParseError, InvalidParams, SearchCapExceeded, LsbError, OSError) as exc:
        return CommandOutcome(EXIT_USAGE, f"error: {exc}", {"error": type(exc).__name__, "message": exc}), machine


def main(argv: list[str] | None = None) -> int:
    out, machine = run(argv)
    text = out.render(machine)
    stream = sys.stdout if out.code in (EXIT_OK, EXIT_FAIL) else sys.stderr
    if text:
        print(text, file=stream)
    return out.code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
