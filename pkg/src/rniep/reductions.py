"""The Partition Problem and its two maps into candidate spectra."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .criteria_partition import SpCertificate
from .errors import EmptyInput, ParseError, SearchTooLarge
from .spectra import SpectrumList

DEFAULT_MAX_HALF = 10_000_000


@dataclass(frozen=True)
class IntegerList:
    entries: tuple

    def __post_init__(self):
        vals = []
        for x in self.entries:
            if isinstance(x, bool) or not isinstance(x, int):
                raise ParseError(f"not an integer: {x!r}")
            if x <= 0:
                raise ParseError(f"entries must be positive, got {x}")
            vals.append(x)
        if not vals:
            raise EmptyInput("an integer list needs at least one entry")
        object.__setattr__(self, "entries", tuple(sorted(vals, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> IntegerList:
        try:
            vals = [int(p) for p in text.split(",") if p.strip()]
        except ValueError as exc:
            raise ParseError(f"bad integer list {text!r}") from exc
        return cls(tuple(vals))

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return ",".join(str(x) for x in self.entries)


@dataclass(frozen=True)
class PartitionWitness:
    side_j: tuple
    side_k: tuple


@dataclass(frozen=True)
class PartitionResult:
    witness: Optional[PartitionWitness]
    reason: str  # "balanced", "odd total" or "no balanced split"

    def __bool__(self):
        return self.witness is not None


def solve_partition(ints: IntegerList, *, max_half: int = DEFAULT_MAX_HALF) -> PartitionResult:
    """Exact subset-sum DP on Python ints used as bitsets.

    The witness is the lexicographically first index set: entries are taken
    greedily in order whenever the rest can still hit the target.
    """
    v = ints.entries
    total = sum(v)
    if total % 2:
        return PartitionResult(None, "odd total")
    half = total // 2
    if half > max_half:
        raise SearchTooLarge(f"target {half} exceeds the subset-sum bound {max_half}")
    mask = (1 << (half + 1)) - 1
    # reach[i]: bit s set iff some subset of v[i:] sums to s
    reach = [0] * (len(v) + 1)
    reach[len(v)] = 1
    for i in range(len(v) - 1, -1, -1):
        reach[i] = (reach[i + 1] | (reach[i + 1] << v[i])) & mask
    if not (reach[0] >> half) & 1:
        return PartitionResult(None, "no balanced split")
    j, k, need = [], [], half
    for i, x in enumerate(v):
        if x <= need and (reach[i + 1] >> (need - x)) & 1:
            j.append(x)
            need -= x
        else:
            k.append(x)
    return PartitionResult(PartitionWitness(tuple(j), tuple(k)), "balanced")


def verify_partition(ints: IntegerList, w: PartitionWitness) -> bool:
    return (Counter(w.side_j) + Counter(w.side_k) == Counter(ints.entries)
            and sum(w.side_j) == sum(w.side_k))


def reduce_to_sp(ints: IntegerList) -> SpectrumList:
    half = Fraction(ints.total, 2)
    return SpectrumList((half, half) + tuple(-x for x in ints.entries))


def reduce_to_pe1(ints: IntegerList) -> SpectrumList:
    half = Fraction(ints.total, 2)
    return SpectrumList((half, half, half) + tuple(-x for x in ints.entries) + (-half,))


def witness_to_sp_certificate(ints: IntegerList, w: PartitionWitness) -> SpCertificate:
    """Each side of a balanced split, negated, sits under one copy of total/2."""
    half = Fraction(ints.total, 2)
    return SpCertificate((
        SpectrumList((half,) + tuple(-x for x in w.side_j)),
        SpectrumList((half,) + tuple(-x for x in w.side_k)),
    ))
