import itertools
import random

import pytest
from hypothesis import given, strategies as st

from oracles import naive_partition
from rniep.criteria_partition import check_pe1, check_sp, verify_sp
from rniep.errors import EmptyInput, ParseError, SearchTooLarge
from rniep.reductions import (
    IntegerList,
    PartitionWitness,
    reduce_to_pe1,
    reduce_to_sp,
    solve_partition,
    verify_partition,
    witness_to_sp_certificate,
)


def test_balanced_example():
    ints = IntegerList.parse("9,6,4,4,2,1")
    res = solve_partition(ints)
    assert res.reason == "balanced"
    assert res.witness == PartitionWitness((9, 4), (6, 4, 2, 1))
    assert verify_partition(ints, res.witness)


def test_odd_total_example():
    res = solve_partition(IntegerList.parse("8,6,4,1"))
    assert not res and res.reason == "odd total"


def test_even_but_unbalanced():
    res = solve_partition(IntegerList.parse("10,2,2"))
    assert not res and res.reason == "no balanced split"


def test_images():
    ints = IntegerList.parse("9,6,4,4,2,1")
    assert str(reduce_to_sp(ints)) == "13,13,-1,-2,-4,-4,-6,-9"
    assert str(reduce_to_pe1(ints)) == "13,13,13,-1,-2,-4,-4,-6,-9,-13"
    assert reduce_to_sp(ints).in_pi and reduce_to_pe1(ints).in_pi


def test_half_integer_images():
    assert str(reduce_to_sp(IntegerList.parse("8,6,4,1"))) == "19/2,19/2,-1,-4,-6,-8"


@pytest.mark.parametrize("text", ["", "1,-2", "0", "a", "1.5"])
def test_integer_list_rejects(text):
    with pytest.raises((ParseError, EmptyInput)):
        IntegerList.parse(text)


def test_dp_bound():
    with pytest.raises(SearchTooLarge):
        solve_partition(IntegerList((10**6, 10**6)), max_half=10)


def test_witness_maps_to_sp_certificate():
    ints = IntegerList.parse("9,6,4,4,2,1")
    cert = witness_to_sp_certificate(ints, solve_partition(ints).witness)
    assert verify_sp(reduce_to_sp(ints), cert)


def sp_accepts(lam):
    # an image outside the context is a no-instance (some integer exceeds half the total)
    return lam.in_pi and check_sp(lam) is not None


def pe1_accepts(lam):
    return lam.in_pi and check_pe1(lam) is not None


def test_out_of_context_image_is_trivial_no():
    ints = IntegerList.parse("17")
    assert not reduce_to_sp(ints).in_pi and not solve_partition(ints)


def test_exhaustive_small_equivalence():
    for n in range(1, 5):
        for combo in itertools.combinations_with_replacement(range(1, 7), n):
            ints = IntegerList(combo)
            yes = bool(solve_partition(ints))
            assert yes == naive_partition(combo)
            assert yes == sp_accepts(reduce_to_sp(ints))
            assert yes == pe1_accepts(reduce_to_pe1(ints))


@given(st.lists(st.integers(1, 30), min_size=1, max_size=9))
def test_solver_matches_brute_force(xs):
    ints = IntegerList(tuple(xs))
    res = solve_partition(ints)
    assert bool(res) == naive_partition(xs)
    if res:
        assert verify_partition(ints, res.witness)


def test_random_equivalence():
    rng = random.Random(19)
    for _ in range(200):
        ints = IntegerList(tuple(rng.randint(1, 20) for _ in range(rng.randint(1, 10))))
        yes = bool(solve_partition(ints))
        assert yes == sp_accepts(reduce_to_sp(ints))
        assert yes == pe1_accepts(reduce_to_pe1(ints))
