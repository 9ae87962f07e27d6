"""Perfect-2+ membership via a prescribed diagonal and spectrum subproblem.

The nonnegative entries of the list are the prescribed eigenvalues
(alphas); the negative entries are split into tails, one per diagonal
slot.  Slot i carries a diagonal value rho_i >= -sum(tail_i).  The list is
a member when some nonnegative matrix with diagonal (rho_i) has spectrum
(alpha_i).  Decided exactly when there are at most two alphas.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import MissingWitness, UnsupportedK
from .exactnum import RationalMatrix, char_poly, is_nonnegative, poly_from_roots
from .setpart import set_partitions
from .spectra import SpectrumList, require_context, same_multiset, split_signs


@dataclass(frozen=True)
class DiagSpecInstance:
    diagonal: tuple
    spectrum: SpectrumList

    def __post_init__(self):
        object.__setattr__(self, "diagonal", tuple(Fraction(d) for d in self.diagonal))
        if not isinstance(self.spectrum, SpectrumList):
            object.__setattr__(self, "spectrum", SpectrumList(tuple(self.spectrum)))

    @property
    def k(self):
        return len(self.diagonal)

    @property
    def trace_consistent(self) -> bool:
        return sum(self.diagonal, Fraction(0)) == self.spectrum.sigma


@dataclass(frozen=True)
class Pe2Certificate:
    tails: tuple   # of SpectrumList, possibly empty, one per diagonal slot
    alphas: tuple  # nonnegative entries of the list, largest first
    rhos: tuple
    witness_matrix: Optional[RationalMatrix] = None


class Verdict(enum.Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Pe2Result:
    verdict: Verdict
    certificate: Optional[Pe2Certificate] = None


def decide_diagspec_k2(inst: DiagSpecInstance) -> Optional[RationalMatrix]:
    """Nonnegative matrix with the given diagonal and spectrum, or None (k <= 2)."""
    if inst.k > 2:
        raise UnsupportedK(f"k = {inst.k}; only k <= 2 is decided exactly")
    if any(d < 0 for d in inst.diagonal):
        raise ValueError("diagonal entries must be nonnegative")
    if inst.k != inst.spectrum.n:
        return None
    if inst.k == 0:
        return None
    if inst.k == 1:
        (d,), (a,) = inst.diagonal, inst.spectrum.entries
        return RationalMatrix(((d,),)) if a == d else None
    d1, d2 = inst.diagonal
    a1, a2 = inst.spectrum.entries
    if a1 + a2 != d1 + d2 or a1 * a2 > d1 * d2:
        return None
    return RationalMatrix(((d1, 1), (d1 * d2 - a1 * a2, d2)))


def _best_rhos(total, lower):
    """rho with sum ``total``, rho_i >= lower_i, product as large as possible."""
    l1, l2 = lower
    if l1 + l2 > total:
        return None
    r1 = min(max(total / 2, l1), total - l2)
    return r1, total - r1


def _tail_partitions(negs, k):
    """Unordered splits of ``negs`` into exactly k tails, empties allowed."""
    seen = set()
    for groups in set_partitions(list(negs), max_blocks=k):
        groups = groups + [[]] * (k - len(groups))
        key = tuple(sorted(tuple(g) for g in groups))
        if key in seen:
            continue
        seen.add(key)
        yield groups


def check_pe2plus(lam: SpectrumList, cert: Optional[Pe2Certificate] = None) -> Pe2Result:
    """Three-way verdict; k >= 3 is UNKNOWN unless ``cert`` verifies."""
    require_context(lam)
    pos, neg = split_signs(lam)
    alphas = pos.entries
    k = len(alphas)
    if k > 2:
        if cert is not None and verify_pe2plus(lam, cert):
            return Pe2Result(Verdict.MEMBER, cert)
        return Pe2Result(Verdict.UNKNOWN)
    total = sum(alphas, Fraction(0))
    target = SpectrumList(alphas)
    for groups in _tail_partitions(neg.entries, k):
        lower = [max(Fraction(0), -sum(g, Fraction(0))) for g in groups]
        if k == 1:
            rhos = (alphas[0],) if lower[0] <= alphas[0] else None
        else:
            rhos = _best_rhos(total, lower)
            if rhos is not None and rhos[0] * rhos[1] < alphas[0] * alphas[1]:
                rhos = None
        if rhos is None:
            continue
        witness = decide_diagspec_k2(DiagSpecInstance(rhos, target))
        if witness is None:
            continue
        found = Pe2Certificate(
            tails=tuple(SpectrumList(tuple(g)) for g in groups),
            alphas=tuple(alphas),
            rhos=tuple(rhos),
            witness_matrix=witness,
        )
        return Pe2Result(Verdict.MEMBER, found)
    return Pe2Result(Verdict.NON_MEMBER)


def verify_pe2plus(lam: SpectrumList, cert: Pe2Certificate) -> bool:
    if cert.witness_matrix is None:
        raise MissingWitness("a Perfect-2+ certificate needs its witness matrix")
    try:
        if not lam.in_pi:
            return False
        tails = [tuple(t) for t in cert.tails]
        alphas = tuple(Fraction(a) for a in cert.alphas)
        rhos = tuple(Fraction(r) for r in cert.rhos)
        k = len(alphas)
        if len(tails) != k or len(rhos) != k or k == 0:
            return False
        if any(a < 0 for a in alphas) or max(alphas) != lam.rho:
            return False
        if any(x >= 0 for t in tails for x in t):
            return False
        for r, t in zip(rhos, tails):
            if r < 0 or r < -sum(t, Fraction(0)):
                return False
        if not same_multiset(lam, list(alphas) + [x for t in tails for x in t]):
            return False
        w = cert.witness_matrix
        if w.order != k or not is_nonnegative(w) or w.diag() != rhos:
            return False
        return char_poly(w) == poly_from_roots(alphas)
    except (TypeError, AttributeError, ValueError):
        return False


def diagonal_certificate(lam: SpectrumList, blocks: Sequence) -> Pe2Certificate:
    """Certificate from a Suleimanova partition: rho_i = alpha_i, diagonal witness."""
    blocks = sorted((tuple(b) for b in blocks), key=lambda b: b[0], reverse=True)
    heads = tuple(b[0] for b in blocks)
    return Pe2Certificate(
        tails=tuple(SpectrumList(b[1:]) for b in blocks),
        alphas=heads,
        rhos=heads,
        witness_matrix=RationalMatrix.diagonal(heads),
    )
