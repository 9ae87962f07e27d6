import pytest

from oracles import all_set_partitions
from rniep.setpart import bell, blocks_from_rgs, restricted_growth_strings, set_partitions


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203), (7, 877)])
def test_bell_numbers(n, count):
    assert bell(n) == count
    assert sum(1 for _ in restricted_growth_strings(n)) == count


def test_order_and_endpoints():
    rgs = list(restricted_growth_strings(3))
    assert rgs == sorted(rgs)
    assert rgs[0] == (0, 0, 0) and rgs[-1] == (0, 1, 2)


def test_growth_restriction():
    for r in restricted_growth_strings(6):
        for i, b in enumerate(r):
            assert b <= max(r[:i], default=-1) + 1


def test_max_blocks():
    assert all(max(r) < 2 for r in restricted_growth_strings(5, max_blocks=2))
    assert sum(1 for _ in restricted_growth_strings(5, max_blocks=2)) == 16


def test_blocks_from_rgs():
    assert blocks_from_rgs("abcd", (0, 1, 0, 2)) == [["a", "c"], ["b"], ["d"]]


def test_set_partitions_match_independent_enumeration():
    canon = lambda parts: sorted(sorted(b) for b in parts)  # noqa: E731
    items = list(range(5))
    mine = sorted(canon(p) for p in set_partitions(items))
    theirs = sorted(canon(p) for p in all_set_partitions(items))
    assert mine == theirs
