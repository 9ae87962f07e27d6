"""Random candidate spectra and an empirical audit of the criteria inclusions.

Each sample index gets its own RNG stream derived from ``(seed, index)``,
so reports do not depend on how the work is split across processes.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from .crealizable import compile_sp_to_bms, search_bms, verify_bms
from .criteria_linear import CHECKERS, CRITERIA as LINEAR
from .criteria_partition import check_bo, check_pe1, check_sp
from .diagspec import Verdict, check_pe2plus, diagonal_certificate
from .errors import RejectionStall, SearchTooLarge
from .spectra import SpectrumList

# (inner, outer): membership in inner must imply membership in outer
INCLUSIONS = (
    ("su", "sp"),
    ("su", "ke"),
    ("ke", "bo"),
    ("sp", "bo"),
    ("sp", "bms_compiled"),
    ("sp", "pe2plus"),
    ("bms", "pe2plus"),
)

ALL_CRITERIA = LINEAR + ("sp", "pe1", "bo", "bms", "pe2plus")

MEMBER = "member"
NON_MEMBER = "non-member"
UNKNOWN = "unknown"
NOT_FOUND = "not-found"
SKIPPED = "skipped"


@dataclass(frozen=True)
class SampleConfig:
    n: int = 4
    samples: int = 1000
    seed: int = 42
    max_abs: int = 10
    denominator: int = 1
    max_tries: int = 10_000
    bms_budget: int = 200
    max_examples: int = 5
    probes: tuple = ()

    def __post_init__(self):
        if self.samples <= 0:
            raise ValueError("samples must be positive")
        if self.max_abs <= 0:
            raise ValueError("max_abs must be positive")
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if self.n <= 0:
            raise ValueError("n must be positive")


def draw_sample(cfg: SampleConfig, index: int) -> SpectrumList:
    rng = random.Random(f"{cfg.seed}:{cfg.n}:{index}")
    for _ in range(cfg.max_tries):
        nums = [rng.randint(-cfg.max_abs, cfg.max_abs) for _ in range(cfg.n)]
        lam = SpectrumList(tuple(Fraction(x, cfg.denominator) for x in nums))
        if lam.in_pi:
            return lam
    raise RejectionStall(f"no in-context sample after {cfg.max_tries} draws (index {index})")


def sample_pi_q(cfg: SampleConfig) -> list:
    return [draw_sample(cfg, i) for i in range(cfg.samples)]


def evaluate(lam: SpectrumList, bms_budget: int = 200) -> dict:
    """Run every decidable checker on one in-context list."""
    out = {}
    for name in LINEAR:
        out[name] = MEMBER if CHECKERS[name](lam).member else NON_MEMBER
    try:
        sp = check_sp(lam)
        out["sp"] = MEMBER if sp else NON_MEMBER
    except SearchTooLarge:
        sp = None
        out["sp"] = SKIPPED
    try:
        out["pe1"] = MEMBER if check_pe1(lam) else NON_MEMBER
    except SearchTooLarge:
        out["pe1"] = SKIPPED
    try:
        out["bo"] = MEMBER if check_bo(lam) else NON_MEMBER
    except SearchTooLarge:
        out["bo"] = SKIPPED

    if sp is not None:
        out["bms_compiled"] = MEMBER if verify_bms(lam, compile_sp_to_bms(sp)) else NON_MEMBER
        out["bms"] = MEMBER
    else:
        out["bms_compiled"] = UNKNOWN
        res = search_bms(lam, budget=bms_budget)
        out["bms"] = MEMBER if res.found else NOT_FOUND

    pe2_cert = diagonal_certificate(lam, sp.blocks) if sp is not None else None
    pe2 = check_pe2plus(lam, pe2_cert)
    out["pe2plus"] = {Verdict.MEMBER: MEMBER, Verdict.NON_MEMBER: NON_MEMBER,
                      Verdict.UNKNOWN: UNKNOWN}[pe2.verdict]
    return out


def inclusion_violations(verdicts: dict) -> list:
    """Pairs whose inner criterion accepted while the outer one decisively rejected."""
    return [(a, b) for a, b in INCLUSIONS
            if verdicts.get(a) == MEMBER and verdicts.get(b) == NON_MEMBER]


def separations(verdicts: dict) -> list:
    """Pairs witnessing strictness: inner rejects, outer accepts."""
    return [(a, b) for a, b in INCLUSIONS
            if verdicts.get(a) == NON_MEMBER and verdicts.get(b) == MEMBER]


@dataclass
class AuditReport:
    config: dict
    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    separating_examples: dict = field(default_factory=dict)
    probes: list = field(default_factory=list)
    skipped: int = 0

    def to_doc(self) -> dict:
        return {
            "config": self.config,
            "counts": self.counts,
            "violations": self.violations,
            "separating_examples": self.separating_examples,
            "probes": self.probes,
            "skipped": self.skipped,
        }

    def summary_table(self) -> str:
        cols = [MEMBER, NON_MEMBER, UNKNOWN, NOT_FOUND, SKIPPED]
        lines = [f"{'criterion':<10}" + "".join(f"{c:>12}" for c in cols)]
        for crit in ALL_CRITERIA:
            row = self.counts.get(crit, {})
            lines.append(f"{crit:<10}" + "".join(f"{row.get(c, 0):>12}" for c in cols))
        lines.append("")
        lines.append(f"inclusion violations: {len(self.violations)}")
        for v in self.violations:
            lines.append(f"  ({v['input']}): {v['inner']} accepted, {v['outer']} rejected")
        for pair, examples in self.separating_examples.items():
            lines.append(f"separating {pair}: " + "; ".join(f"({e})" for e in examples))
        return "\n".join(lines)


def _evaluate_chunk(args):
    cfg, indices = args
    rows = []
    for i in indices:
        lam = draw_sample(cfg, i)
        rows.append((str(lam), evaluate(lam, cfg.bms_budget)))
    return rows


def audit_inclusions(cfg: SampleConfig, workers: int = 1) -> AuditReport:
    """Sample, evaluate every checker, and collect inclusion violations.

    With ``workers > 1`` the sample indices are split across processes; the
    report is identical because results are merged in index order.
    """
    idx = list(range(cfg.samples))
    if workers <= 1:
        rows = _evaluate_chunk((cfg, idx))
    else:
        size = max(1, len(idx) // (workers * 8))
        chunks = [(cfg, idx[i:i + size]) for i in range(0, len(idx), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [r for part in pool.map(_evaluate_chunk, chunks) for r in part]

    probe_rows = []
    for text in cfg.probes:
        lam = SpectrumList.parse(text) if isinstance(text, str) else SpectrumList(tuple(text))
        probe_rows.append((str(lam), evaluate(lam, cfg.bms_budget)))

    conf = asdict(cfg)
    conf["probes"] = [str(p) for p in cfg.probes]
    report = AuditReport(config=conf)
    for crit in ALL_CRITERIA:
        report.counts[crit] = {}
    for text, verdicts in rows + probe_rows:
        for crit in ALL_CRITERIA:
            c = report.counts[crit]
            c[verdicts[crit]] = c.get(verdicts[crit], 0) + 1
        if SKIPPED in verdicts.values():
            report.skipped += 1
        for a, b in inclusion_violations(verdicts):
            report.violations.append({"input": text, "inner": a, "outer": b})
        for a, b in separations(verdicts):
            key = f"{b}\\{a}"
            bucket = report.separating_examples.setdefault(key, [])
            if len(bucket) < cfg.max_examples and text not in bucket:
                bucket.append(text)
    for text, verdicts in probe_rows:
        report.probes.append({"input": text, "verdicts": verdicts})
    return report


def find_separating(report: AuditReport, inner: str, outer: str) -> Optional[str]:
    bucket = report.separating_examples.get(f"{outer}\\{inner}", [])
    return bucket[0] if bucket else None
