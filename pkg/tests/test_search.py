import pytest

from lsb.breadth import breadth_bruteforce
from lsb.errors import InvalidParams, SearchCapExceeded
from lsb.exactlin import F3, F5, QQ, GradedDim
from lsb.invariants import odd_square_vanishes, profile
from lsb.search import SearchConstraints, inhabitation_search, splits

G = GradedDim


def test_heisenberg_class_inhabited():
    r = inhabitation_search(SearchConstraints(G(1, 0), G(2, 0)), F3, max_total=4)
    assert r.found and r.cross_check == "Agree"
    P = profile(r.algebra)
    assert P.derived_dims == G(1, 0) and P.quotient_center_dims == G(2, 0)
    assert breadth_bruteforce(r.algebra).pairs == {G(1, 0)}


def test_abelian_witness():
    r = inhabitation_search(SearchConstraints(G(0, 0), G(0, 0)), F5, max_total=3)
    assert r.found and r.algebra.is_abelian() and r.algebra.n == 0


def test_odd_square_constraint_respected():
    r = inhabitation_search(SearchConstraints(G(0, 1), G(1, 1), odd_square_zero=True), F3, max_total=4)
    assert r.found and odd_square_vanishes(r.algebra)


def test_empty_class_counts_candidates():
    # derived (2,0) cannot come from a quotient with a single even direction and no odd part
    r = inhabitation_search(SearchConstraints(G(2, 0), G(1, 0)), F3, max_total=4)
    assert not r.found and r.candidates > 0 and r.outcome == "Empty"


def test_splits_cover_targets():
    c = SearchConstraints(G(1, 2), G(1, 2))
    for base, center in splits(c, 6):
        assert base.even >= 1 and base.odd >= 2 and center.even >= 1 and center.odd >= 2


def test_guards():
    with pytest.raises(InvalidParams):
        inhabitation_search(SearchConstraints(G(1, 0), G(2, 0)), QQ)
    with pytest.raises(InvalidParams):
        inhabitation_search(SearchConstraints(G(1, 0), G(2, 0)), F3, max_total=7)
    with pytest.raises(SearchCapExceeded):
        inhabitation_search(SearchConstraints(G(3, 0), G(3, 0)), F5, max_total=6, cap=100)
