"""Candidate spectra: sorted rational lists and their context predicate.

A :class:`SpectrumList` is always stored nonincreasing.  Whether it lies in
the candidate context (sum >= 0 and spectral radius equal to the first
entry) is a flag, never a construction error, so that lists outside the
context can still be represented and reported on.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import EmptyInput, NotASublist, NotInContext
from .exactnum import format_rational, parse_rational


@dataclass(frozen=True)
class SpectrumList:
    entries: tuple = ()

    def __post_init__(self):
        vals = sorted((parse_rational(x) for x in self.entries), reverse=True)
        object.__setattr__(self, "entries", tuple(vals))

    @classmethod
    def parse(cls, text: str) -> SpectrumList:
        """Parse the comma separated form, e.g. ``"13/2,1/2,-7"``."""
        parts = [p for p in text.split(",")]
        if text.strip() == "":
            return cls(())
        return cls(tuple(parse_rational(p) for p in parts))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def sigma(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    @cached_property
    def rho(self) -> Fraction:
        if not self.entries:
            return Fraction(0)
        return max(self.entries[0], -self.entries[-1])

    @cached_property
    def p(self) -> int:
        return sum(1 for x in self.entries if x >= 0)

    @property
    def q(self) -> int:
        return self.n - self.p

    @property
    def in_pi(self) -> bool:
        return bool(self.entries) and self.sigma >= 0 and self.rho == self.entries[0]

    def scaled(self, c) -> SpectrumList:
        c = Fraction(c)
        return SpectrumList(tuple(c * x for x in self.entries))

    def __str__(self):
        return ",".join(format_rational(x) for x in self.entries)

    def to_strings(self) -> list:
        return [format_rational(x) for x in self.entries]


@dataclass(frozen=True)
class PiMembership:
    sigma: Fraction
    rho: Fraction
    in_pi: bool
    p: int
    q: int


def membership(lam: SpectrumList) -> PiMembership:
    return PiMembership(sigma=lam.sigma, rho=lam.rho, in_pi=lam.in_pi, p=lam.p, q=lam.q)


def normalize(raw: Iterable) -> tuple:
    """Sort ``raw`` into a SpectrumList and compute its membership record."""
    raw = list(raw)
    if not raw:
        raise EmptyInput("a spectrum needs at least one entry")
    lam = SpectrumList(tuple(raw))
    return lam, membership(lam)


def require_context(lam: SpectrumList) -> None:
    if lam.in_pi:
        return
    if not lam.entries:
        raise EmptyInput("empty list")
    sigma_ok = lam.sigma >= 0
    rho_ok = lam.rho == lam.entries[0]
    reasons = []
    if not sigma_ok:
        reasons.append(f"sum {format_rational(lam.sigma)} < 0")
    if not rho_ok:
        reasons.append(f"|{format_rational(lam.entries[-1])}| exceeds the largest entry "
                       f"{format_rational(lam.entries[0])}")
    raise NotInContext("; ".join(reasons), sigma_ok=sigma_ok, rho_ok=rho_ok)


def union(*lists: SpectrumList) -> SpectrumList:
    return SpectrumList(tuple(x for lst in lists for x in lst.entries))


def setminus(a: SpectrumList, b: SpectrumList) -> SpectrumList:
    """Remove one occurrence of each entry of ``b`` from ``a``."""
    have = Counter(a.entries)
    for x in b.entries:
        if have[x] == 0:
            raise NotASublist(f"{format_rational(x)} is not available in ({a})")
        have[x] -= 1
    return SpectrumList(tuple(have.elements()))


def split_signs(lam: SpectrumList) -> tuple:
    """(nonnegative part, negative part); zeros go to the nonnegative part."""
    pos = tuple(x for x in lam.entries if x >= 0)
    neg = tuple(x for x in lam.entries if x < 0)
    return SpectrumList(pos), SpectrumList(neg)


def same_multiset(a: Iterable, b: Iterable) -> bool:
    return Counter(Fraction(x) for x in a) == Counter(Fraction(x) for x in b)
