"""Explicit nonnegative matrices for Suleimanova lists and their unions."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .criteria_partition import SpCertificate, is_suleimanova
from .errors import InternalCoefficientViolation, InvalidCertificate, NotSuleimanova
from .exactnum import RationalMatrix, block_diag, char_poly, is_nonnegative, poly_from_roots
from .spectra import SpectrumList, union

SU_COMPANION = "su_companion"
SP_BLOCK_DIAG = "sp_block_diag"
EXTERNAL = "external"


@dataclass(frozen=True)
class Realization:
    matrix: RationalMatrix
    claimed_spectrum: SpectrumList
    method: str = EXTERNAL


def companion(coeffs_below_leading) -> RationalMatrix:
    """Companion of x^n - c_{n-1} x^{n-1} - ... - c_0: ones below the diagonal,
    (c_0, ..., c_{n-1}) down the last column."""
    c = [Fraction(x) for x in coeffs_below_leading]
    n = len(c)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] += c[i]
    return RationalMatrix(tuple(tuple(r) for r in rows))


def realize_su(lam: SpectrumList) -> Realization:
    if not is_suleimanova(lam.entries):
        raise NotSuleimanova(f"({lam}) is not a Suleimanova list")
    poly = poly_from_roots(lam.entries)
    n = lam.n
    # p(x) = x^n - sum a_i x^i; every a_i must come out nonnegative
    a = [-poly.coeffs[i] if i < len(poly.coeffs) else Fraction(0) for i in range(n)]
    bad = [i for i, x in enumerate(a) if x < 0]
    if bad:
        raise InternalCoefficientViolation(
            f"characteristic polynomial of ({lam}) has a positive coefficient at degree {bad[0]}")
    return Realization(companion(a), lam, SU_COMPANION)


def realize_sp(cert: SpCertificate) -> Realization:
    blocks = tuple(cert.blocks)
    if not blocks or not all(is_suleimanova(b) for b in blocks):
        raise InvalidCertificate("every block must be a Suleimanova list")
    parts = [realize_su(SpectrumList(tuple(b))) for b in blocks]
    matrix = block_diag(*(p.matrix for p in parts))
    claimed = union(*(p.claimed_spectrum for p in parts))
    return Realization(matrix, claimed, SP_BLOCK_DIAG)


def verify_realization(r: Realization) -> bool:
    m = r.matrix
    if m.order != len(r.claimed_spectrum):
        return False
    return is_nonnegative(m) and char_poly(m) == poly_from_roots(r.claimed_spectrum.entries)
