"""JSON-shaped documents for certificates, matrices and move sequences.

Every rational is written as a ``"p/q"`` (or ``"p"``) string.  Each
certificate document carries ``criterion`` and ``input`` so that it can be
verified on its own.
"""
from __future__ import annotations

import json

from .crealizable import Move, MoveSequence, verify_bms
from .criteria_partition import (
    BoCertificate,
    Pe1Certificate,
    SpCertificate,
    verify_bo,
    verify_pe1,
    verify_sp,
)
from .diagspec import Pe2Certificate, verify_pe2plus
from .errors import ParseError
from .exactnum import RationalMatrix, format_rational, parse_rational
from .realize import Realization, verify_realization
from .reductions import IntegerList, PartitionWitness, verify_partition
from .spectra import SpectrumList

BMS_ALIASES = ("bms", "sou", "so", "se")


def rationals(xs) -> list:
    return [format_rational(x) for x in xs]


def parse_rationals(xs) -> tuple:
    if not isinstance(xs, list):
        raise ParseError(f"expected a list of rationals, got {xs!r}")
    return tuple(parse_rational(x) for x in xs)


def spectrum_from(xs) -> SpectrumList:
    return SpectrumList(parse_rationals(xs))


def matrix_to_doc(m: RationalMatrix) -> dict:
    return {"order": m.order, "entries": [format_rational(x) for row in m.rows for x in row]}


def matrix_from_doc(doc: dict) -> RationalMatrix:
    n = doc["order"]
    flat = parse_rationals(doc["entries"])
    if not isinstance(n, int) or n < 1 or len(flat) != n * n:
        raise ParseError("matrix entries do not match its order")
    return RationalMatrix(tuple(flat[i * n:(i + 1) * n] for i in range(n)))


def move_to_doc(mv: Move) -> dict:
    doc = {"kind": mv.kind, "operands": list(mv.operands)}
    if mv.epsilon is not None:
        doc["epsilon"] = format_rational(mv.epsilon)
    if mv.position is not None:
        doc["position"] = mv.position
    if mv.sign is not None:
        doc["sign"] = mv.sign
    return doc


def move_from_doc(doc: dict) -> Move:
    eps = doc.get("epsilon")
    return Move(
        kind=doc["kind"],
        operands=tuple(doc["operands"]),
        epsilon=parse_rational(eps) if eps is not None else None,
        position=doc.get("position"),
        sign=doc.get("sign"),
    )


def sequence_to_doc(seq: MoveSequence) -> dict:
    return {"start_count": seq.start_count, "moves": [move_to_doc(m) for m in seq.moves]}


def sequence_from_doc(doc: dict) -> MoveSequence:
    return MoveSequence(doc["start_count"], tuple(move_from_doc(m) for m in doc["moves"]))


def certificate_to_doc(criterion: str, lam, cert) -> dict:
    """Serialize ``cert`` for ``lam`` (a SpectrumList, or IntegerList for partition)."""
    doc = {"criterion": criterion}
    if isinstance(lam, IntegerList):
        doc["input"] = list(lam.entries)
    else:
        doc["input"] = lam.to_strings()
    if isinstance(cert, SpCertificate):
        doc["blocks"] = [b.to_strings() for b in cert.blocks]
    elif isinstance(cert, Pe1Certificate):
        doc["alpha"] = format_rational(cert.alpha)
        doc["beta"] = format_rational(cert.beta)
        doc["blocks"] = [b.to_strings() for b in cert.blocks]
    elif isinstance(cert, BoCertificate):
        doc["neg_groups"] = [g.to_strings() for g in cert.neg_groups]
    elif isinstance(cert, MoveSequence):
        doc.update(sequence_to_doc(cert))
    elif isinstance(cert, Pe2Certificate):
        doc["tails"] = [t.to_strings() for t in cert.tails]
        doc["alphas"] = rationals(cert.alphas)
        doc["rhos"] = rationals(cert.rhos)
        if cert.witness_matrix is not None:
            doc["witness_matrix"] = matrix_to_doc(cert.witness_matrix)
    elif isinstance(cert, Realization):
        doc["method"] = cert.method
        doc["matrix"] = matrix_to_doc(cert.matrix)
    elif isinstance(cert, PartitionWitness):
        doc["side_j"] = list(cert.side_j)
        doc["side_k"] = list(cert.side_k)
    else:
        raise TypeError(f"cannot serialize {type(cert).__name__}")
    return doc


def certificate_from_doc(doc: dict):
    """Return ``(criterion, input, certificate)`` parsed from a document."""
    if not isinstance(doc, dict) or "criterion" not in doc:
        raise ParseError("certificate document needs a 'criterion' field")
    crit = doc["criterion"]
    try:
        if crit == "partition":
            ints = IntegerList(tuple(doc["input"]))
            return crit, ints, PartitionWitness(tuple(doc["side_j"]), tuple(doc["side_k"]))
        lam = spectrum_from(doc["input"])
        if crit == "sp":
            cert = SpCertificate(tuple(spectrum_from(b) for b in doc["blocks"]))
        elif crit == "pe1":
            cert = Pe1Certificate(parse_rational(doc["alpha"]), parse_rational(doc["beta"]),
                                  tuple(spectrum_from(b) for b in doc["blocks"]))
        elif crit == "bo":
            cert = BoCertificate(tuple(spectrum_from(g) for g in doc["neg_groups"]))
        elif crit in BMS_ALIASES:
            cert = sequence_from_doc(doc)
        elif crit == "pe2plus":
            wm = doc.get("witness_matrix")
            cert = Pe2Certificate(
                tails=tuple(spectrum_from(t) for t in doc["tails"]),
                alphas=parse_rationals(doc["alphas"]),
                rhos=parse_rationals(doc["rhos"]),
                witness_matrix=matrix_from_doc(wm) if wm is not None else None,
            )
        elif crit == "realization":
            cert = Realization(matrix_from_doc(doc["matrix"]), lam, doc.get("method", "external"))
        else:
            raise ParseError(f"unknown certificate criterion {crit!r}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed {crit} certificate: {exc}") from exc
    return crit, lam, cert


def verify_document(doc: dict) -> bool:
    crit, lam, cert = certificate_from_doc(doc)
    if crit == "partition":
        return verify_partition(lam, cert)
    if crit == "sp":
        return verify_sp(lam, cert)
    if crit == "pe1":
        return verify_pe1(lam, cert)
    if crit == "bo":
        return verify_bo(lam, cert)
    if crit in BMS_ALIASES:
        return verify_bms(lam, cert)
    if crit == "pe2plus":
        return verify_pe2plus(lam, cert)
    return verify_realization(cert)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
