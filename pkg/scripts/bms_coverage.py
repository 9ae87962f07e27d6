"""How often does the backward move search certify lists that SP misses?

Samples in-context lists, keeps those without a Suleimanova partition, and
tabulates search outcomes against the Borobia and Perfect-2+ verdicts.
"""
import argparse
from collections import Counter

from rniep.crealizable import search_bms
from rniep.criteria_partition import check_bo, check_sp
from rniep.diagspec import check_pe2plus
from rniep.survey import SampleConfig, draw_sample


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--budget", type=int, default=2000)
    args = ap.parse_args()

    cfg = SampleConfig(n=args.n, samples=args.samples, seed=args.seed)
    table = Counter()
    for i in range(cfg.samples):
        lam = draw_sample(cfg, i)
        if check_sp(lam) is not None:
            continue
        found = search_bms(lam, budget=args.budget).found
        bo = check_bo(lam) is not None
        pe2 = check_pe2plus(lam).verdict.value
        table[(found, bo, pe2)] += 1
    print(f"{'bms found':>10} {'bo':>6} {'pe2plus':>12} {'count':>7}")
    for (found, bo, pe2), c in sorted(table.items(), key=lambda kv: -kv[1]):
        print(f"{str(found):>10} {str(bo):>6} {pe2:>12} {c:>7}")


if __name__ == "__main__":
    main()
