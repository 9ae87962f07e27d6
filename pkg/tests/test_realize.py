import random
from fractions import Fraction

import pytest
from hypothesis import given

from oracles import random_suleimanova, sympy_charpoly
from rniep.criteria_partition import SpCertificate, check_sp
from rniep.errors import InvalidCertificate, NotSuleimanova
from rniep.exactnum import RationalMatrix, poly_from_roots
from rniep.realize import Realization, companion, realize_sp, realize_su, verify_realization
from rniep.spectra import SpectrumList
from strategies import sp_lists, suleimanova_lists


def L(text):
    return SpectrumList.parse(text)


def test_two_by_two_realization_verifies():
    assert verify_realization(Realization(RationalMatrix(((1, 5), (4, 2))), L("6,-3")))


def test_wrong_spectrum_or_negative_entry_rejected():
    assert not verify_realization(Realization(RationalMatrix(((1, 5), (4, 2))), L("6,-2")))
    assert not verify_realization(Realization(RationalMatrix(((1, -5), (4, 2))), L("6,-3")))
    assert not verify_realization(Realization(RationalMatrix(((1, 5), (4, 2))), L("6,-3,0")))


def test_companion_layout():
    assert companion([18, 3]).rows == ((0, 18), (1, 3))


def test_realize_su_companion():
    r = realize_su(L("6,-3"))
    assert r.matrix.rows == ((0, 18), (1, 3))
    assert verify_realization(r)


def test_realize_su_rejects_non_suleimanova():
    with pytest.raises(NotSuleimanova):
        realize_su(L("4,2,-3,-3"))


def test_realize_sp_block_diagonal():
    lam = L("13,13,-1,-2,-4,-4,-6,-9")
    r = realize_sp(check_sp(lam))
    assert r.matrix.order == 8 and r.claimed_spectrum == lam
    assert verify_realization(r)
    with pytest.raises(InvalidCertificate):
        realize_sp(SpCertificate((L("3,1,-1"),)))


@given(suleimanova_lists())
def test_su_realizations_verify(lam):
    r = realize_su(lam)
    assert verify_realization(r)
    assert sympy_charpoly(r.matrix.rows) == poly_from_roots(lam.entries).coeffs


@given(sp_lists())
def test_sp_realizations_verify(pair):
    lam, _ = pair
    assert verify_realization(realize_sp(check_sp(lam)))


def test_random_suleimanova_with_fractions():
    rng = random.Random(5)
    for _ in range(200):
        lam = SpectrumList(random_suleimanova(rng, rng.randint(1, 8)))
        assert verify_realization(realize_su(lam))
        assert all(x >= 0 for row in realize_su(lam).matrix.rows for x in row)
    assert Fraction(0) in realize_su(L("0")).matrix.rows[0]
