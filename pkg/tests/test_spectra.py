from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rniep.errors import EmptyInput, NotASublist, NotInContext, ParseError
from rniep.spectra import (
    SpectrumList,
    membership,
    normalize,
    require_context,
    same_multiset,
    setminus,
    split_signs,
    union,
)
from strategies import in_context_lists, rationals


def test_parse_sorts_descending():
    lam = SpectrumList.parse("-3,4,2,-3")
    assert lam.entries == (4, 2, -3, -3)
    assert str(lam) == "4,2,-3,-3"


def test_parse_fractions_and_errors():
    assert SpectrumList.parse("13/2,1/2,-7").entries == (Fraction(13, 2), Fraction(1, 2), -7)
    with pytest.raises(ParseError):
        SpectrumList.parse("1,,2")
    assert SpectrumList.parse("").entries == ()


def test_statistics():
    lam = SpectrumList.parse("4,2,0,-3,-3")
    assert (lam.n, lam.sigma, lam.rho, lam.p, lam.q) == (5, 0, 4, 3, 2)
    assert lam.in_pi


@pytest.mark.parametrize("text, sigma_ok, rho_ok", [
    ("1,-3", False, False), ("2,2,-3", True, False), ("1,-1,-1", False, True),
])
def test_context_failures_name_condition(text, sigma_ok, rho_ok):
    lam = SpectrumList.parse(text)
    assert not lam.in_pi
    with pytest.raises(NotInContext) as info:
        require_context(lam)
    assert info.value.sigma_ok == sigma_ok and info.value.rho_ok == rho_ok


def test_normalize():
    lam, mem = normalize([Fraction(-3), 6])
    assert lam.entries == (6, -3)
    assert mem.in_pi and mem.p == 1 and mem.q == 1
    with pytest.raises(EmptyInput):
        normalize([])


def test_setminus_requires_sublist():
    a = SpectrumList.parse("4,2,-3,-3")
    assert setminus(a, SpectrumList.parse("-3,2")).entries == (4, -3)
    with pytest.raises(NotASublist):
        setminus(a, SpectrumList.parse("-3,-3,-3"))


def test_split_signs_puts_zero_on_the_nonnegative_side():
    pos, neg = split_signs(SpectrumList.parse("3,0,-1"))
    assert pos.entries == (3, 0) and neg.entries == (-1,)


lists = st.lists(rationals(), max_size=6).map(lambda xs: SpectrumList(tuple(xs)))


@given(lists, lists, lists)
def test_union_commutative_associative(a, b, c):
    assert same_multiset(union(a, b), union(b, a))
    assert union(union(a, b), c) == union(a, union(b, c))


@given(lists, lists)
def test_setminus_undoes_union(a, b):
    assert setminus(union(a, b), b) == a


@given(lists)
def test_split_signs_partitions(lam):
    pos, neg = split_signs(lam)
    assert pos.n == lam.p and neg.n == lam.q
    assert union(pos, neg) == lam


@given(in_context_lists())
def test_membership_record_consistent(lam):
    m = membership(lam)
    assert m.in_pi and m.sigma == sum(lam.entries) and m.rho == max(abs(x) for x in lam.entries)
