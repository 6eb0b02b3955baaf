"""Named algebras: abelian, the two breadth-one families, and breadth-two witnesses."""

from __future__ import annotations

from .errors import InvalidParams
from .exactlin import F5, Field
from .superalg import LieSuperAlgebra, from_brackets, verify_axioms


def _build(field, even, odd, rels) -> LieSuperAlgebra:
    names = list(even) + list(odd)
    n = len(names)
    brackets = {}
    for a, b, out in rels:
        v = [0] * n
        for name, c in out:
            v[names.index(name)] = c
        brackets[(names.index(a), names.index(b))] = v
    L = from_brackets(field, even, odd, brackets)
    rep = verify_axioms(L)
    if not rep.axioms_ok:  # pragma: no cover - constructors are fixed
        raise AssertionError(f"catalog algebra fails axioms: {rep.violation}")
    return L


def abelian(r: int, s: int, field: Field = F5) -> LieSuperAlgebra:
    if r < 0 or s < 0:
        raise InvalidParams("abelian dimensions must be nonnegative")
    return _build(field, [f"x{i + 1}" for i in range(r)], [f"y{i + 1}" for i in range(s)], [])


def h_even(m: int, n: int, k0: int = 0, k1: int = 0, field: Field = F5) -> LieSuperAlgebra:
    """<x_1..x_2m, z> + <y_1..y_n> + A(k0,k1) with [x_i, x_{i+m}] = z, [y_j, y_j] = z."""
    if m < 0 or n < 0 or k0 < 0 or k1 < 0 or m + n == 0:
        raise InvalidParams("H_e needs m, n >= 0 with m + n >= 1")
    even = [f"x{i + 1}" for i in range(2 * m)] + ["z"] + [f"u{i + 1}" for i in range(k0)]
    odd = [f"y{j + 1}" for j in range(n)] + [f"v{i + 1}" for i in range(k1)]
    rels = [(f"x{i + 1}", f"x{i + m + 1}", [("z", 1)]) for i in range(m)]
    rels += [(f"y{j + 1}", f"y{j + 1}", [("z", 1)]) for j in range(n)]
    return _build(field, even, odd, rels)


def h_odd(m: int, k0: int = 0, k1: int = 0, field: Field = F5) -> LieSuperAlgebra:
    """<x_1..x_m> + <y_1..y_m, z> + A(k0,k1) with [x_i, y_i] = z."""
    if m < 1 or k0 < 0 or k1 < 0:
        raise InvalidParams("H_o needs m >= 1")
    even = [f"x{i + 1}" for i in range(m)] + [f"u{i + 1}" for i in range(k0)]
    odd = [f"y{i + 1}" for i in range(m)] + ["z"] + [f"v{i + 1}" for i in range(k1)]
    rels = [(f"x{i + 1}", f"y{i + 1}", [("z", 1)]) for i in range(m)]
    return _build(field, even, odd, rels)


def b1(field: Field = F5) -> LieSuperAlgebra:
    return _build(field, ["z1", "z2"], ["a", "x"],
                  [("a", "a", [("z1", 1)]), ("a", "x", [("z2", 1)])])


def b2(field: Field = F5) -> LieSuperAlgebra:
    return _build(field, ["z1", "z2", "z3"], ["a", "x"],
                  [("a", "a", [("z1", 1)]), ("a", "x", [("z2", 1)]), ("x", "x", [("z3", 1)])])


def b3(field: Field = F5) -> LieSuperAlgebra:
    """Free two-step nilpotent Lie algebra on three generators."""
    return _build(field, ["e1", "e2", "e3", "z12", "z13", "z23"], [],
                  [("e1", "e2", [("z12", 1)]), ("e1", "e3", [("z13", 1)]), ("e2", "e3", [("z23", 1)])])


def b4(field: Field = F5) -> LieSuperAlgebra:
    return _build(field, ["e"], ["f1", "f2", "w1", "w2"],
                  [("e", "f1", [("w1", 1)]), ("e", "f2", [("w2", 1)])])


def b5(field: Field = F5) -> LieSuperAlgebra:
    return _build(field, ["e", "z"], ["f", "w"],
                  [("e", "f", [("w", 1)]), ("f", "f", [("z", 1)])])


WITNESSES = {"B1": b1, "B2": b2, "B3": b3, "B4": b4, "B5": b5}
FAMILIES = ("A", "He", "Ho") + tuple(WITNESSES)


def catalog_build(name: str, field: Field = F5, m: int = 1, n: int = 0, k0: int = 0,
                  k1: int = 0) -> LieSuperAlgebra:
    """Build a catalog algebra by name.

    ``A`` reads its dimensions from ``k0`` (even) and ``k1`` (odd).
    """
    key = name.strip()
    if key.upper() in WITNESSES:
        return WITNESSES[key.upper()](field)
    if key.upper() == "A":
        return abelian(k0, k1, field)
    if key.lower() in ("he", "h_e"):
        return h_even(m, n, k0, k1, field)
    if key.lower() in ("ho", "h_o"):
        return h_odd(m, k0, k1, field)
    raise InvalidParams(f"unknown catalog family {name!r}; expected one of {', '.join(FAMILIES)}")


def acceptance_catalog(field: Field = F5) -> dict[str, LieSuperAlgebra]:
    """The catalog used by the cross-check and law suites, keyed by label."""
    out = {"A(0,0)": abelian(0, 0, field), "A(2,1)": abelian(2, 1, field)}
    for m in range(3):
        for n in range(3):
            if m + n >= 1:
                out[f"He({m},{n},0,0)"] = h_even(m, n, 0, 0, field)
    for m in (1, 2, 3):
        out[f"Ho({m},0,0)"] = h_odd(m, 0, 0, field)
    for key, build in WITNESSES.items():
        out[key] = build(field)
    return out


def match_breadth_one_normal_form(L: LieSuperAlgebra) -> str | None:
    """Label of the H_e/H_o normal form whose structure constants equal L's, if any."""
    r, s = L.dims.even, L.dims.odd
    for m in range(0, (r - 1) // 2 + 1):
        k0 = r - 2 * m - 1
        for nn in range(0, s + 1):
            if m + nn == 0:
                continue
            cand = h_even(m, nn, k0, s - nn, L.field)
            if cand == L:
                return f"He({m},{nn},{k0},{s - nn})"
    for m in range(1, r + 1):
        if s - m - 1 < 0:
            continue
        cand = h_odd(m, r - m, s - m - 1, L.field)
        if cand == L:
            return f"Ho({m},{r - m},{s - m - 1})"
    return None
