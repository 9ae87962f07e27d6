"""Realizability criteria defined by finitely many linear inequalities.

Every checker takes a :class:`SpectrumList`, raises :class:`NotInContext`
when the list is outside the candidate context, and otherwise returns a
:class:`LinearVerdict` naming the first inequality that fails (indices
ascending).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactnum import format_rational as fr
from .spectra import SpectrumList, require_context

CRITERIA = ("su", "ci", "ke", "sa", "fi", "so1")


@dataclass(frozen=True)
class PsiData:
    """Kellogg's index set and deficit sums; indices are 1-based."""

    psi_set: tuple
    psi_k: dict = field(hash=False)
    psi: Fraction


@dataclass(frozen=True)
class LinearVerdict:
    criterion: str
    member: bool
    failing_inequality: Optional[str] = None

    def __bool__(self):
        return self.member


def compute_psi(lam) -> PsiData:
    """Psi(L), psi_k(L) for k in Psi(L), and psi(L) for a sorted list.

    Works on any nonincreasing sequence (the Kellogg checker feeds it the
    tail of the list, which need not be in context itself).
    """
    v = tuple(lam.entries) if isinstance(lam, SpectrumList) else tuple(lam)
    n = len(v)
    p = sum(1 for x in v if x >= 0)
    q = n - p
    lam_at = lambda i: v[i - 1]  # noqa: E731  1-based access
    psi_set = tuple(i for i in range(1, min(p, q) + 1) if lam_at(i) + lam_at(n + 1 - i) < 0)
    psi_k = {}
    running = Fraction(0)
    for k in psi_set:
        # running holds the pair sums over Psi indices below k
        psi_k[k] = running + lam_at(n + 1 - k)
        running += lam_at(k) + lam_at(n + 1 - k)
    # trailing sum only when q > p; an empty range otherwise
    trailing = sum((lam_at(n + 1 - j) for j in range(p + 1, q + 1)), Fraction(0))
    return PsiData(psi_set=psi_set, psi_k=psi_k, psi=running + trailing)


def _verdict(name, failure=None):
    return LinearVerdict(name, failure is None, failure)


def check_su(lam: SpectrumList) -> LinearVerdict:
    require_context(lam)
    v = lam.entries
    if v[0] < 0:
        return _verdict("su", f"lambda_1 = {fr(v[0])} < 0")
    for i in range(1, len(v)):
        if v[i] >= 0:
            return _verdict("su", f"lambda_{i + 1} = {fr(v[i])} is not negative")
    return _verdict("su")


def check_ci(lam: SpectrumList) -> LinearVerdict:
    require_context(lam)
    v = lam.entries
    bound = v[0] / len(v)
    for i in range(1, len(v)):
        if abs(v[i]) > bound:
            return _verdict("ci", f"|lambda_{i + 1}| = {fr(abs(v[i]))} > lambda_1/n = {fr(bound)}")
    return _verdict("ci")


def check_ke(lam: SpectrumList) -> LinearVerdict:
    require_context(lam)
    head = lam.entries[0]
    gamma = lam.entries[1:]
    data = compute_psi(gamma)
    if head < -data.psi:
        return _verdict("ke", f"lambda_1 = {fr(head)} < -psi(Gamma) = {fr(-data.psi)}")
    for k in data.psi_set:
        if head < -data.psi_k[k]:
            return _verdict("ke", f"lambda_1 = {fr(head)} < -psi_{k}(Gamma) = {fr(-data.psi_k[k])}")
    return _verdict("ke")


def check_sa(lam: SpectrumList) -> LinearVerdict:
    require_context(lam)
    v = lam.entries
    n = len(v)
    mean = lam.sigma / n
    for i in range(2, (n + 1) // 2 + 1):
        half = (v[i - 1] + v[n - i]) / 2
        if mean < half:
            return _verdict("sa", f"sum/n = {fr(mean)} < (lambda_{i} + lambda_{n - i + 1})/2 = {fr(half)}")
    return _verdict("sa")


def check_fi(lam: SpectrumList) -> LinearVerdict:
    require_context(lam)
    v = lam.entries
    n = len(v)
    lhs = v[0] + v[-1] + lam.sigma
    rhs = sum((abs(v[i - 1] + v[n - i]) / 2 for i in range(2, n)), Fraction(0))
    if lhs < rhs:
        return _verdict("fi", f"lambda_1 + lambda_n + sum = {fr(lhs)} < {fr(rhs)}")
    return _verdict("fi")


def check_so1(lam: SpectrumList) -> LinearVerdict:
    require_context(lam)
    v = lam.entries
    psi = compute_psi(lam).psi
    if v[0] + v[-1] < -psi:
        return _verdict("so1", f"lambda_1 + lambda_n = {fr(v[0] + v[-1])} < -psi = {fr(-psi)}")
    return _verdict("so1")


CHECKERS = {
    "su": check_su,
    "ci": check_ci,
    "ke": check_ke,
    "sa": check_sa,
    "fi": check_fi,
    "so1": check_so1,
}
