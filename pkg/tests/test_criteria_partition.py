import random
from fractions import Fraction

import pytest
from hypothesis import given

from oracles import naive_pe1, naive_sp, random_in_context
from rniep.criteria_linear import check_ke
from rniep.criteria_partition import (
    BoCertificate,
    Pe1Certificate,
    SpCertificate,
    check_bo,
    check_pe1,
    check_sp,
    is_suleimanova,
    verify_bo,
    verify_pe1,
    verify_sp,
)
from rniep.errors import NotInContext, SearchTooLarge
from rniep.spectra import SpectrumList
from strategies import in_context_lists, sp_lists


def L(text):
    return SpectrumList.parse(text)


def test_sp_absent_for_mixed_example():
    assert check_sp(L("4,2,-3,-3")) is None


def test_sp_reduction_image():
    cert = check_sp(L("13,13,-1,-2,-4,-4,-6,-9"))
    assert [b.entries for b in cert.blocks] == [(13, -4, -9), (13, -1, -2, -4, -6)]
    assert verify_sp(L("13,13,-1,-2,-4,-4,-6,-9"), cert)


def test_pe1_reduction_image():
    lam = L("13,13,13,-1,-2,-4,-4,-6,-9,-13")
    cert = check_pe1(lam)
    assert (cert.alpha, cert.beta) == (13, -13)
    assert [b.entries for b in cert.blocks] == [(13, -4, -9), (13, -1, -2, -4, -6)]
    assert verify_pe1(lam, cert)


def test_pe1_and_bo_on_mixed_example():
    lam = L("4,2,-3,-3")
    pe1 = check_pe1(lam)
    assert (pe1.alpha, pe1.beta) == (4, -3) and [b.entries for b in pe1.blocks] == [(2, -3)]
    bo = check_bo(lam)
    assert [g.entries for g in bo.neg_groups] == [(-3,), (-3,)]


def test_all_absent_for_unrealizable_example():
    lam = L("3,3,-2,-2,-2")
    assert check_sp(lam) is None and check_pe1(lam) is None and check_bo(lam) is None


def test_bo_merges_groups_when_needed():
    # singleton merge fails Kellogg, merging the negatives succeeds
    lam = L("5,5,-1,-2,-3,-4")
    assert not check_ke(lam).member
    cert = check_bo(lam)
    assert cert is not None and len(cert.neg_groups) < 4
    assert verify_bo(lam, cert)


def test_beta_may_be_zero():
    cert = check_pe1(L("1,0"))
    assert cert is not None and cert.beta == 0 and cert.blocks == ()


def test_is_suleimanova():
    assert is_suleimanova((3, -1, -2))
    assert is_suleimanova((0,))
    assert not is_suleimanova((3, 0, -1))
    assert not is_suleimanova((1, -2))
    assert not is_suleimanova(())


def test_context_required():
    for check in (check_sp, check_pe1, check_bo):
        with pytest.raises(NotInContext):
            check(L("1,-3"))


def test_budgets_raise_instead_of_guessing():
    lam = SpectrumList(tuple([Fraction(30)] * 6 + [Fraction(-7)] * 20))
    with pytest.raises(SearchTooLarge):
        check_bo(lam, max_q=10)
    hard = SpectrumList((40, 39, 38, 37, -17, -17, -17, -17, -16, -16, -16, -16, -16))
    with pytest.raises(SearchTooLarge):
        check_sp(hard, max_nodes=3)


def test_verifiers_reject_tampering():
    lam = L("13,13,-1,-2,-4,-4,-6,-9")
    assert not verify_sp(lam, SpCertificate((L("13,-1,-9"), L("13,-2,-4,-4,-6"))))
    assert not verify_sp(lam, SpCertificate((L("13,-4,-9"), L("13,-1,-2,-4"))))
    assert not verify_sp(lam, SpCertificate(()))
    assert not verify_pe1(L("4,2,-3,-3"), Pe1Certificate(Fraction(4), Fraction(-3), (L("-3,2"), L("0"))))
    assert not verify_pe1(L("4,2,-3,-3"), Pe1Certificate(Fraction(2), Fraction(-3), (L("4,-3"),)))
    assert not verify_bo(L("3,3,-2,-2,-2"), BoCertificate((L("-2,-2"), L("-2"))))
    assert not verify_bo(L("4,2,-3,-3"), BoCertificate((L("-3"),)))


def test_oracle_agreement_small_lists():
    rng = random.Random(11)
    for _ in range(300):
        v = random_in_context(rng, rng.randint(1, 6), max_abs=8)
        lam = SpectrumList(v)
        assert (check_sp(lam) is not None) == naive_sp(v), v
        assert (check_pe1(lam) is not None) == naive_pe1(v), v


@given(in_context_lists(max_n=8))
def test_certificates_verify(lam):
    for check, verify in ((check_sp, verify_sp), (check_pe1, verify_pe1), (check_bo, verify_bo)):
        cert = check(lam)
        if cert is not None:
            assert verify(lam, cert)


@given(sp_lists())
def test_constructed_sp_lists_are_found(pair):
    lam, _ = pair
    cert = check_sp(lam)
    assert cert is not None and verify_sp(lam, cert)


@given(in_context_lists(max_n=7))
def test_sp_inside_bo(lam):
    if check_sp(lam) is not None:
        assert check_bo(lam) is not None
