"""Realizability criteria witnessed by a partition of the list (SP, Pe1, Bo).

The ``check_*`` functions are exact exponential searches: they return a
certificate when one exists and ``None`` when none does, and raise
:class:`SearchTooLarge` rather than guess when a configured bound is hit.
The ``verify_*`` functions re-check a certificate in polynomial time.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .criteria_linear import check_ke
from .errors import SearchTooLarge
from .setpart import restricted_growth_strings
from .spectra import SpectrumList, require_context, same_multiset, split_signs

DEFAULT_MAX_NODES = 2_000_000
DEFAULT_MAX_BO_Q = 14


@dataclass(frozen=True)
class SpCertificate:
    blocks: tuple  # of SpectrumList


@dataclass(frozen=True)
class Pe1Certificate:
    alpha: Fraction
    beta: Fraction
    blocks: tuple  # of SpectrumList, head first


@dataclass(frozen=True)
class BoCertificate:
    neg_groups: tuple  # of SpectrumList


def is_suleimanova(block) -> bool:
    """One nonnegative head, strictly negative tail, nonnegative sum."""
    v = tuple(block)
    if not v:
        return False
    head, tail = v[0], v[1:]
    if head < 0 or any(x >= 0 for x in tail):
        return False
    return head + sum(tail, Fraction(0)) >= 0


class _Budget:
    def __init__(self, max_nodes):
        self.left = max_nodes

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise SearchTooLarge("partition search exceeded its node budget")


def _pack(negs, caps, budget):
    """Assign every magnitude in ``negs`` to a bin without overflowing ``caps``.

    Returns a list of bin indices or None.  Bins with equal remaining
    capacity are interchangeable, so only the first of them is tried.
    """
    n = len(negs)
    caps = list(caps)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + negs[i]
    failed = set()
    assign = [0] * n

    def dfs(i):
        if i == n:
            return True
        key = (i, tuple(sorted(caps)))
        if key in failed:
            return False
        budget.tick()
        if suffix[i] > sum(caps):
            failed.add(key)
            return False
        x = negs[i]
        seen = set()
        for b, c in enumerate(caps):
            if c < x or c in seen:
                continue
            seen.add(c)
            caps[b] = c - x
            assign[i] = b
            if dfs(i + 1):
                return True
            caps[b] = c
        failed.add(key)
        return False

    return assign if dfs(0) else None


def _cover(negs, need, budget):
    """Assign every magnitude in ``negs`` to a bin so each bin collects at least ``need``.

    Surplus is harmless, so deficits are clipped at zero in the memo key.
    """
    n = len(negs)
    deficit = list(need)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + negs[i]
    failed = set()
    assign = [0] * n

    def dfs(i):
        outstanding = sum(d for d in deficit if d > 0)
        if i == n:
            return outstanding == 0
        if outstanding > suffix[i]:
            return False
        key = (i, tuple(sorted(max(d, 0) for d in deficit)))
        if key in failed:
            return False
        budget.tick()
        x = negs[i]
        seen = set()
        for b, d in enumerate(deficit):
            dk = max(d, 0)
            if dk in seen:
                continue
            seen.add(dk)
            deficit[b] = d - x
            assign[i] = b
            if dfs(i + 1):
                return True
            deficit[b] = d
        failed.add(key)
        return False

    if n and not need:
        return None
    return assign if dfs(0) else None


def sp_blocks(values, *, max_nodes: int = DEFAULT_MAX_NODES):
    """Suleimanova blocks of a sorted numeric tuple (ints or Fractions), or None.

    Each nonnegative entry heads its own block; the search packs negative
    entries (largest magnitude first) under the heads (largest first).
    """
    heads = [x for x in values if x >= 0]
    negs = [-x for x in reversed(values) if x < 0]  # magnitudes, largest first
    assign = _pack(negs, heads, _Budget(max_nodes))
    if assign is None:
        return None
    groups = [[h] for h in heads]
    for mag, b in zip(negs, assign):
        groups[b].append(-mag)
    return [tuple(g) for g in groups]


def check_sp(lam: SpectrumList, *, max_nodes: int = DEFAULT_MAX_NODES) -> Optional[SpCertificate]:
    """Partition ``lam`` into Suleimanova lists, or return None if impossible."""
    require_context(lam)
    blocks = sp_blocks(lam.entries, max_nodes=max_nodes)
    if blocks is None:
        return None
    return SpCertificate(tuple(SpectrumList(b) for b in blocks))


def verify_sp(lam: SpectrumList, cert: SpCertificate) -> bool:
    try:
        blocks = tuple(cert.blocks)
        if not blocks:
            return False
        if not all(is_suleimanova(b) for b in blocks):
            return False
        return same_multiset(lam, (x for b in blocks for x in b))
    except (TypeError, AttributeError):
        return False


def check_pe1(lam: SpectrumList, *, max_nodes: int = DEFAULT_MAX_NODES) -> Optional[Pe1Certificate]:
    """Search for a Perfect-1 partition (alpha, beta) + blocks.

    alpha is forced to the first entry.  beta runs over the distinct
    nonpositive values below it, most negative first.
    """
    require_context(lam)
    v = lam.entries
    if len(v) < 2:
        return None
    alpha, rest = v[0], v[1:]
    budget = _Budget(max_nodes)
    tried = set()
    for beta in sorted(x for x in rest if x <= 0):
        if beta in tried:
            continue
        tried.add(beta)
        remaining = list(rest)
        remaining.remove(beta)
        heads = [x for x in remaining if x >= 0]
        if any(h + beta > 0 for h in heads):
            continue
        negs = [-x for x in sorted(x for x in remaining if x < 0)]
        assign = _cover(negs, heads, budget)
        if assign is None:
            continue
        groups = [[h] for h in heads]
        for mag, b in zip(negs, assign):
            groups[b].append(-mag)
        return Pe1Certificate(alpha, beta, tuple(SpectrumList(tuple(g)) for g in groups))
    return None


def verify_pe1(lam: SpectrumList, cert: Pe1Certificate) -> bool:
    try:
        if not lam.in_pi:
            return False
        alpha, beta = Fraction(cert.alpha), Fraction(cert.beta)
        if alpha != lam.rho or beta > 0:
            return False
        for block in cert.blocks:
            v = tuple(block)
            if not v:
                return False
            head, tail = max(v), list(v)
            tail.remove(head)
            if head < 0 or any(t > 0 for t in tail):
                return False
            if sum(v, Fraction(0)) > 0 or head + beta > 0:
                return False
        everything = [alpha, beta] + [x for b in cert.blocks for x in b]
        return same_multiset(lam, everything)
    except (TypeError, AttributeError, ValueError):
        return False


def _bo_merged(pos: SpectrumList, groups) -> SpectrumList:
    return SpectrumList(tuple(pos.entries) + tuple(sum(g, Fraction(0)) for g in groups))


def _ke_ok(merged: SpectrumList) -> bool:
    return merged.in_pi and check_ke(merged).member


def check_bo(lam: SpectrumList, *, max_q: int = DEFAULT_MAX_BO_Q) -> Optional[BoCertificate]:
    """Search set partitions of the negative part for a Kellogg-merged list.

    The all-singletons partition is tried first (it reproduces ``lam``
    itself), then every restricted growth string in lexicographic order.
    """
    require_context(lam)
    pos, neg = split_signs(lam)
    if neg.n > max_q:
        raise SearchTooLarge(f"{neg.n} negative entries exceed the Borobia search bound {max_q}")
    negs = neg.entries
    singletons = [[x] for x in negs]
    if _ke_ok(_bo_merged(pos, singletons)):
        return BoCertificate(tuple(SpectrumList((x,)) for x in negs))
    seen = set()
    for rgs in restricted_growth_strings(len(negs)):
        groups = [[] for _ in range(max(rgs) + 1)] if rgs else []
        for x, b in zip(negs, rgs):
            groups[b].append(x)
        merged = _bo_merged(pos, groups)
        if merged.entries in seen:
            continue
        seen.add(merged.entries)
        if _ke_ok(merged):
            return BoCertificate(tuple(SpectrumList(tuple(g)) for g in groups))
    return None


def verify_bo(lam: SpectrumList, cert: BoCertificate) -> bool:
    try:
        if not lam.in_pi:
            return False
        pos, neg = split_signs(lam)
        groups = [tuple(g) for g in cert.neg_groups]
        if any(not g for g in groups):
            return False
        if not same_multiset(neg, (x for g in groups for x in g)):
            return False
        return _ke_ok(_bo_merged(pos, groups))
    except (TypeError, AttributeError):
        return False
