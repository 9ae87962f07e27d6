"""Command line front end.

Exit codes: 0 member/yes/verified, 1 non-member/no, 2 unknown or not found
within budget, 64 usage or parse error, 65 input outside the candidate
context, 70 internal self-check failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import serialize
from .crealizable import DEFAULT_BUDGET, search_bms
from .criteria_linear import CHECKERS, CRITERIA as LINEAR
from .criteria_partition import check_bo, check_pe1, check_sp
from .diagspec import Verdict, check_pe2plus
from .errors import (
    EmptyInput,
    InternalCoefficientViolation,
    InvariantViolation,
    MissingWitness,
    NotInContext,
    ParseError,
    RniepError,
    SearchTooLarge,
)
from .realize import realize_sp, realize_su, verify_realization
from .reductions import IntegerList, reduce_to_pe1, reduce_to_sp, solve_partition
from .exactnum import parse_rational
from .spectra import SpectrumList, require_context
from .survey import SampleConfig, audit_inclusions

SCHEMA_VERSION = 1

EXIT_YES, EXIT_NO, EXIT_UNKNOWN = 0, 1, 2
EXIT_USAGE, EXIT_CONTEXT, EXIT_INTERNAL = 64, 65, 70

CHECK_CHOICES = LINEAR + ("sp", "pe1", "bo", "bms", "sou", "so", "se", "pe2plus", "all")
VERDICT_EXIT = {"member": EXIT_YES, "non-member": EXIT_NO, "unknown": EXIT_UNKNOWN,
                "not-found": EXIT_UNKNOWN}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes (survey only; searches are single-threaded)")
    common.add_argument("--timing", action="store_true", help="fill timing_ms in --json output")

    p = _Parser(prog="rniep", description="Decide realizability criteria for real spectra, exactly.")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="decide a criterion for a list")
    c.add_argument("--criterion", choices=CHECK_CHOICES)
    c.add_argument("--all", action="store_true", help="run every criterion")
    c.add_argument("--input", required=True, help='comma separated rationals, e.g. "4,2,-3,-3"')
    c.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="state budget for the bms search")

    r = sub.add_parser("realize", parents=[common], help="build and verify a realizing matrix")
    r.add_argument("--method", choices=("su", "sp"), required=True)
    r.add_argument("--input", required=True)

    d = sub.add_parser("reduce", parents=[common], help="map an integer list to a spectrum")
    d.add_argument("--to", choices=("sp", "pe1"), required=True)
    d.add_argument("--input", required=True, help="comma separated positive integers")

    pp = sub.add_parser("partition", parents=[common], help="solve the Partition Problem")
    pp.add_argument("--input", required=True)

    v = sub.add_parser("verify", parents=[common], help="re-check a certificate file")
    v.add_argument("--cert", required=True, help="certificate JSON file ('-' for stdin)")

    s = sub.add_parser("survey", parents=[common], help="audit criteria inclusions on random lists")
    s.add_argument("--n", type=int, default=4)
    s.add_argument("--samples", type=int, default=1000)
    s.add_argument("--seed", type=int, default=42)
    s.add_argument("--max-abs", type=int, default=10)
    s.add_argument("--den", type=int, default=1)
    s.add_argument("--bms-budget", type=int, default=200)
    s.add_argument("--probe", action="append", default=[], help="extra list to evaluate (repeatable)")
    return p


def _parse_spectrum(text, notices):
    try:
        given = tuple(parse_rational(x) for x in text.split(",")) if text.strip() else ()
    except ParseError as exc:
        raise UsageError(str(exc)) from exc
    if not given:
        raise UsageError("empty input list")
    lam = SpectrumList(given)
    if given != lam.entries:
        notices.append(f"note: input reordered to ({lam})")
    return lam


def _check_one(name, lam, budget):
    """(verdict, certificate document or None, details)."""
    if name in LINEAR:
        v = CHECKERS[name](lam)
        details = {} if v.member else {"failing_inequality": v.failing_inequality}
        return ("member" if v.member else "non-member"), None, details
    try:
        if name == "sp":
            cert = check_sp(lam)
        elif name == "pe1":
            cert = check_pe1(lam)
        elif name == "bo":
            cert = check_bo(lam)
        elif name in serialize.BMS_ALIASES:
            res = search_bms(lam, budget=budget)
            details = {"budget": res.budget, "nodes": res.nodes,
                       "budget_exhausted": res.budget_exhausted}
            if res.found:
                return "member", serialize.certificate_to_doc(name, lam, res.sequence), details
            return "not-found", None, details
        elif name == "pe2plus":
            res = check_pe2plus(lam)
            if res.verdict is Verdict.MEMBER:
                return "member", serialize.certificate_to_doc(name, lam, res.certificate), {}
            if res.verdict is Verdict.UNKNOWN:
                return "unknown", None, {"reason": f"k = {lam.p} > 2 is not decided"}
            return "non-member", None, {}
        else:
            raise UsageError(f"unknown criterion {name!r}")
    except SearchTooLarge as exc:
        return "unknown", None, {"reason": str(exc)}
    if cert is None:
        return "non-member", None, {}
    return "member", serialize.certificate_to_doc(name, lam, cert), {}


def cmd_check(args, notices):
    if args.all or args.criterion == "all":
        names = LINEAR + ("sp", "pe1", "bo", "bms", "pe2plus")
    elif args.criterion:
        names = (args.criterion,)
    else:
        raise UsageError("check needs --criterion or --all")
    lam = _parse_spectrum(args.input, notices)
    require_context(lam)
    results = {n: _check_one(n, lam, args.budget) for n in names}
    if len(names) == 1:
        verdict, cert, details = results[names[0]]
        doc = {"input": lam.to_strings(), "criterion": names[0], "verdict": verdict, "details": details}
        if cert is not None:
            doc["certificate"] = cert
        lines = [f"{names[0]}: {verdict}"]
        if details.get("failing_inequality"):
            lines.append(f"  fails: {details['failing_inequality']}")
        if names[0] in serialize.BMS_ALIASES:
            found = "Found" if verdict == "member" else "NotFound"
            lines = [f"{names[0]}: {found} (budget {details['budget']}, "
                     f"{details['nodes']} states expanded)"]
            if verdict != "member":
                lines.append("  not a proof of non-membership")
        if cert is not None:
            lines.append("  certificate: " + json.dumps(cert, sort_keys=True))
        return VERDICT_EXIT[verdict], doc, lines
    verdicts = {n: r[0] for n, r in results.items()}
    # every criterion is sufficient: one member settles realizability
    if "member" in verdicts.values():
        overall = "member"
    elif all(v == "non-member" for v in verdicts.values()):
        overall = "non-member"
    else:
        overall = "unknown"
    doc = {
        "input": lam.to_strings(),
        "verdict": overall,
        "details": {n: {"verdict": r[0], **r[2]} for n, r in results.items()},
        "certificates": {n: r[1] for n, r in results.items() if r[1] is not None},
    }
    lines = [f"{n:<8} {r[0]}" for n, r in results.items()]
    lines.append(f"realizable by some criterion: {overall}")
    return VERDICT_EXIT[overall], doc, lines


def cmd_realize(args, notices):
    lam = _parse_spectrum(args.input, notices)
    require_context(lam)
    if args.method == "su":
        if not CHECKERS["su"](lam).member:
            return EXIT_NO, {"input": lam.to_strings(), "verdict": "non-member"}, \
                ["not a Suleimanova list"]
        real = realize_su(lam)
    else:
        cert = check_sp(lam)
        if cert is None:
            return EXIT_NO, {"input": lam.to_strings(), "verdict": "non-member"}, \
                ["no Suleimanova partition exists"]
        real = realize_sp(cert)
    if not verify_realization(real):
        raise InvariantViolation("constructed matrix failed exact verification")
    cert_doc = serialize.certificate_to_doc("realization", lam, real)
    doc = {"input": lam.to_strings(), "verdict": "verified", "certificate": cert_doc}
    lines = ["verified realization:"]
    width = max(len(str(x)) for row in real.matrix.rows for x in row)
    for row in real.matrix.rows:
        lines.append("  [" + " ".join(f"{str(x):>{width}}" for x in row) + "]")
    return EXIT_YES, doc, lines


def _parse_ints(text):
    try:
        return IntegerList.parse(text)
    except (ParseError, EmptyInput) as exc:
        raise UsageError(str(exc)) from exc


def cmd_reduce(args, notices):
    ints = _parse_ints(args.input)
    image = reduce_to_sp(ints) if args.to == "sp" else reduce_to_pe1(ints)
    doc = {"input": list(ints.entries), "verdict": "yes",
           "details": {"image": image.to_strings(), "in_context": image.in_pi, "to": args.to}}
    return EXIT_YES, doc, [str(image)]


def cmd_partition(args, notices):
    ints = _parse_ints(args.input)
    res = solve_partition(ints)
    doc = {"input": list(ints.entries), "verdict": "yes" if res else "no",
           "details": {"reason": res.reason}}
    if res:
        doc["certificate"] = serialize.certificate_to_doc("partition", ints, res.witness)
        w = res.witness
        lines = [f"yes: ({','.join(map(str, w.side_j))}) | ({','.join(map(str, w.side_k))})"]
        return EXIT_YES, doc, lines
    return EXIT_NO, doc, [f"no ({res.reason})"]


def _collect_certificates(doc):
    if not isinstance(doc, dict):
        raise ParseError("certificate file must hold a JSON object")
    if "criterion" in doc and "certificate" not in doc:
        return [doc]
    if isinstance(doc.get("certificate"), dict):
        return [doc["certificate"]]
    if isinstance(doc.get("certificates"), dict) and doc["certificates"]:
        return [doc["certificates"][k] for k in sorted(doc["certificates"])]
    raise ParseError("no certificate found in document")


def cmd_verify(args, notices):
    try:
        if args.cert == "-":
            doc = json.load(sys.stdin)
        else:
            with open(args.cert) as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate: {exc}") from exc
    results = []
    for cert in _collect_certificates(doc):
        try:
            ok = serialize.verify_document(cert)
        except MissingWitness:
            ok = False
        results.append((cert["criterion"], ok))
    ok = all(r for _, r in results)
    out = {"input": doc.get("input"), "verdict": "verified" if ok else "rejected",
           "details": {c: r for c, r in results}}
    lines = [f"{c}: {'verified' if r else 'rejected'}" for c, r in results]
    return (EXIT_YES if ok else EXIT_NO), out, lines


def cmd_survey(args, notices):
    try:
        cfg = SampleConfig(n=args.n, samples=args.samples, seed=args.seed, max_abs=args.max_abs,
                           denominator=args.den, bms_budget=args.bms_budget, probes=tuple(args.probe))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = audit_inclusions(cfg, workers=args.threads)
    verdict = "pass" if not report.violations else "fail"
    doc = {"input": report.config, "verdict": verdict, "details": report.to_doc()}
    code = EXIT_YES if verdict == "pass" else EXIT_INTERNAL
    return code, doc, report.summary_table().splitlines()


COMMANDS = {
    "check": cmd_check,
    "realize": cmd_realize,
    "reduce": cmd_reduce,
    "partition": cmd_partition,
    "verify": cmd_verify,
    "survey": cmd_survey,
}


def _glue_negative_values(argv):
    """Let ``--input -3,4`` through; argparse would read ``-3,4`` as an option."""
    out = list(argv)
    i = 0
    while i < len(out) - 1:
        if out[i] == "--input" and out[i + 1].startswith("-") and out[i + 1][1:2].isdigit():
            out[i:i + 2] = [f"--input={out[i + 1]}"]
        i += 1
    return out


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    notices = []
    started = time.perf_counter()
    try:
        code, doc, lines = COMMANDS[args.subcommand](args, notices)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except NotInContext as exc:
        code, doc, lines = EXIT_CONTEXT, {"verdict": "context-error", "details": {"reason": str(exc)}}, \
            [f"input is not a candidate spectrum: {exc}"]
    except (InternalCoefficientViolation, InvariantViolation) as exc:
        print(f"internal self-check failed: {exc}", file=stderr)
        return EXIT_INTERNAL
    except (ParseError, EmptyInput) as exc:
        print(f"usage error: {exc}", file=stderr)
        return EXIT_USAGE
    except RniepError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_UNKNOWN
    for note in notices:
        print(note, file=stderr)
    if args.json:
        full = {"schema_version": SCHEMA_VERSION, "subcommand": args.subcommand,
                "input": doc.pop("input", None), "verdict": doc.pop("verdict")}
        full.update(doc)
        full["timing_ms"] = round((time.perf_counter() - started) * 1000, 3) if args.timing else None
        print(json.dumps(full, indent=2, sort_keys=True), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
