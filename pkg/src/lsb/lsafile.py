"""Reading and writing the line-oriented ``.lsa`` algebra format.

::

    # comments start with '#'
    field 5            # or: field rational
    even z1 z2 z3
    odd a x
    [a,a] = 1*z1
    [a,x] = 1*z2 + 4*z3

Coefficients are integers or ``a/b``; a bare name means coefficient 1 and
``0`` on the right-hand side is the zero bracket.  Omitted brackets are zero;
the mirrored bracket is derived from the sign rule.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import FieldError, ParseError
from .exactlin import Field, QQ
from .superalg import LieSuperAlgebra, from_brackets, sign

_NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_BRACKET = re.compile(rf"^\[\s*({_NAME})\s*,\s*({_NAME})\s*\]\s*=\s*(.*)$")
_TERM = re.compile(rf"\s*([+-])?\s*(?:(-?\d+(?:\s*/\s*\d+)?)\s*\*\s*)?({_NAME})\s*")


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _terms(rhs: str):
    """Yield (column offset, coefficient, name) for a sum of ``c*name`` terms."""
    pos = 0
    first = True
    while pos < len(rhs):
        m = _TERM.match(rhs, pos)
        if not m or m.end() == pos or (not first and not m.group(1)):
            yield pos, None, None
            return
        sgn = -1 if m.group(1) == "-" else 1
        coef = Fraction(m.group(2).replace(" ", "")) if m.group(2) else Fraction(1)
        yield m.start(3), sgn * coef, m.group(3)
        pos = m.end()
        first = False


def parse(text: str) -> LieSuperAlgebra:
    lines = text.splitlines()
    field: Field | None = None
    even: list[str] | None = None
    odd: list[str] | None = None
    given: dict[tuple[int, int], tuple[list, int]] = {}
    header_done = False
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        words = body.split()
        if field is None:
            if words[0] != "field" or len(words) != 2:
                raise ParseError("expected 'field <p>' or 'field rational'", lineno, col)
            if words[1] in ("rational", "Q", "rationals"):
                field = QQ
            else:
                try:
                    p = int(words[1])
                except ValueError:
                    raise ParseError(f"bad field modulus {words[1]!r}", lineno, col + 6) from None
                try:
                    field = Field(p)
                except FieldError as exc:
                    raise ParseError(str(exc), lineno, col + 6, kind="field") from None
            continue
        if even is None:
            if words[0] != "even":
                raise ParseError("expected 'even <names>'", lineno, col)
            even = words[1:]
            continue
        if odd is None:
            if words[0] != "odd":
                raise ParseError("expected 'odd <names>'", lineno, col)
            odd = words[1:]
            names = even + odd
            for nm in names:
                if not re.fullmatch(_NAME, nm):
                    raise ParseError(f"bad basis name {nm!r}", lineno, col)
            if len(set(names)) != len(names):
                raise ParseError("duplicate basis name", lineno, col)
            header_done = True
            continue
        m = _BRACKET.match(body)
        if not m:
            raise ParseError("expected '[a,b] = <linear combination>'", lineno, col)
        names = even + odd
        idx = {nm: i for i, nm in enumerate(names)}
        n = len(names)
        a, b, rhs = m.group(1), m.group(2), m.group(3)
        for nm, off in ((a, body.index(a)), (b, body.index(b, body.index(a) + len(a)))):
            if nm not in idx:
                raise ParseError(f"unknown basis name {nm!r}", lineno, col + off, kind="unknown-name")
        i, j = idx[a], idx[b]
        rhs_col = col + m.start(3)
        vec = [field.zero] * n
        if rhs.strip() not in ("0", ""):
            for off, coef, nm in _terms(rhs):
                if nm is None:
                    raise ParseError(f"bad term near {rhs[off:].strip()!r}", lineno, rhs_col + off)
                if nm not in idx:
                    raise ParseError(f"unknown basis name {nm!r}", lineno, rhs_col + off, kind="unknown-name")
                try:
                    vec[idx[nm]] = field.reduce(vec[idx[nm]] + field(coef))
                except FieldError as exc:
                    raise ParseError(str(exc), lineno, rhs_col + off, kind="field") from None
        elif not rhs.strip():
            raise ParseError("missing right-hand side", lineno, rhs_col)
        pi, pj = int(i >= len(even)), int(j >= len(even))
        for k, x in enumerate(vec):
            if x != 0 and int(k >= len(even)) != (pi + pj) % 2:
                raise ParseError(f"[{a},{b}] has a component on {names[k]} of the wrong parity",
                                 lineno, rhs_col, kind="grading")
        if i == j and pi == 0 and any(x != 0 for x in vec):
            raise ParseError(f"[{a},{a}] must vanish for an even element", lineno, rhs_col, kind="sign-rule")
        key = (i, j) if i <= j else (j, i)
        canon = vec if i <= j else [field.reduce(sign(pi, pj) * x) for x in vec]
        if key in given and given[key][0] != canon:
            prev_line = given[key][1]
            raise ParseError(f"[{a},{b}] contradicts the sign rule given line {prev_line}",
                             lineno, col, kind="sign-rule")
        given[key] = (canon, lineno)
    if not header_done:
        raise ParseError("incomplete header: need 'field', 'even' and 'odd' lines", len(lines) or 1, 1)
    return from_brackets(field, even, odd, {k: v for k, (v, _) in given.items()})


def _coef(field: Field, x) -> str:
    if field.is_prime:
        return str(int(x))
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def serialize(L: LieSuperAlgebra) -> str:
    """Canonical text: one line per nonzero bracket [e_i, e_j] with i <= j."""
    f = L.field
    out = [f"field {f.p}" if f.is_prime else "field rational",
           " ".join(["even", *L.names[:L.split]]).rstrip(),
           " ".join(["odd", *L.names[L.split:]]).rstrip()]
    for i in range(L.n):
        for j in range(i, L.n):
            v = L.sc[i][j]
            if all(x == 0 for x in v):
                continue
            terms = [f"{_coef(f, x)}*{L.names[k]}" for k, x in enumerate(v) if x != 0]
            out.append(f"[{L.names[i]},{L.names[j]}] = " + " + ".join(terms))
    return "\n".join(out) + "\n"


def load(path) -> LieSuperAlgebra:
    return parse(Path(path).read_text(encoding="utf-8"))


def dump(L: LieSuperAlgebra, path) -> None:
    Path(path).write_text(serialize(L), encoding="utf-8")
