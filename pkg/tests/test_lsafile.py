import pytest
from hypothesis import given

from lsb.catalog import acceptance_catalog, h_odd
from lsb.errors import ParseError
from lsb.exactlin import QQ
from lsb.lsafile import dump, load, parse, serialize

from strategies import two_step


def test_round_trip_catalog():
    for L in acceptance_catalog().values():
        assert parse(serialize(L)) == L


@given(two_step())
def test_round_trip_random(L):
    assert parse(serialize(L)) == L


def test_file_round_trip(tmp_path):
    L = h_odd(2, field=QQ)
    dump(L, tmp_path / "h.lsa")
    assert load(tmp_path / "h.lsa") == L


def test_mirror_derived_and_odd_square_legal():
    L = parse("field 5\neven x1 z\nodd y1 w\n[y1,x1] = 1*w  # mirrored\n[y1,y1] = z\n")
    assert L.sc[0][2][3] == 4  # [x1,y1] = -w
    assert L.sc[2][2][1] == 1


def test_consistent_double_entry_accepted():
    L = parse("field 5\neven x1\nodd y1 z\n[x1,y1] = z\n[y1,x1] = -1*z\n")
    assert L == h_odd(1)


def test_rational_coefficients():
    L = parse("field rational\neven x1 x2 z\nodd\n[x1,x2] = 1/2*z\n")
    assert L.sc[0][1][2] == QQ("1/2")


@pytest.mark.parametrize("text,kind,line", [
    ("field 5\neven x1\nodd y1 z\n[x1,y1] = z\n[y1,x1] = z\n", "sign-rule", 5),
    ("field 5\neven x1 z\nodd y1\n[x1,y1] = z\n", "grading", 4),
    ("field 5\neven x1\nodd y1 z\n[x1,q] = z\n", "unknown-name", 4),
    ("field 4\neven x\nodd\n", "field", 1),
    ("field 2\neven x\nodd\n", "field", 1),
    ("field 5\neven x1 x2\nodd\n[x1,x2] = = x1\n", "syntax", 4),
    ("field 5\neven x1 z\nodd\n[x1,x1] = z\n", "sign-rule", 4),
    ("even x\nodd\n", "syntax", 1),
])
def test_parse_errors(text, kind, line):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.kind == kind
    assert exc.value.line == line
