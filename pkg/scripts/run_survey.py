"""Inclusion audit over a range of list lengths; writes one JSON report per n.

    python3 scripts/run_survey.py --n-min 3 --n-max 8 --samples 10000 --out results/
"""
import argparse
import json
import pathlib
import time

from rniep.survey import SampleConfig, audit_inclusions


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=3)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--samples", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--max-abs", type=int, default=10)
    ap.add_argument("--den", type=int, default=1)
    ap.add_argument("--bms-budget", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=pathlib.Path, default=None)
    args = ap.parse_args()

    total_violations = 0
    for n in range(args.n_min, args.n_max + 1):
        cfg = SampleConfig(n=n, samples=args.samples, seed=args.seed, max_abs=args.max_abs,
                           denominator=args.den, bms_budget=args.bms_budget)
        start = time.perf_counter()
        rep = audit_inclusions(cfg, workers=args.workers)
        elapsed = time.perf_counter() - start
        total_violations += len(rep.violations)
        print(f"== n = {n}  ({elapsed:.1f}s)")
        print(rep.summary_table())
        print()
        if args.out:
            args.out.mkdir(parents=True, exist_ok=True)
            (args.out / f"survey_n{n}.json").write_text(json.dumps(rep.to_doc(), indent=2, sort_keys=True))
    print(f"total inclusion violations: {total_violations}")
    raise SystemExit(1 if total_violations else 0)


if __name__ == "__main__":
    main()
