"""Check that Partition answers survive both maps into candidate spectra.

Exhaustive over multisets up to a size and entry bound, then random instances.
"""
import argparse
import itertools
import random
import time

from rniep.criteria_partition import check_pe1, check_sp
from rniep.reductions import IntegerList, reduce_to_pe1, reduce_to_sp, solve_partition


def accepts(check, lam):
    return lam.in_pi and check(lam) is not None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-entry", type=int, default=8)
    ap.add_argument("--random", type=int, default=1000)
    ap.add_argument("--random-max-n", type=int, default=12)
    ap.add_argument("--random-max-entry", type=int, default=20)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    instances = [c for n in range(1, args.max_n + 1)
                 for c in itertools.combinations_with_replacement(range(1, args.max_entry + 1), n)]
    instances += [tuple(rng.randint(1, args.random_max_entry) for _ in range(rng.randint(1, args.random_max_n)))
                  for _ in range(args.random)]
    start = time.perf_counter()
    yes = mismatches = 0
    for combo in instances:
        ints = IntegerList(combo)
        ans = bool(solve_partition(ints))
        yes += ans
        if ans != accepts(check_sp, reduce_to_sp(ints)) or ans != accepts(check_pe1, reduce_to_pe1(ints)):
            mismatches += 1
            print("mismatch:", ints)
    print(f"{len(instances)} instances ({yes} balanced), {mismatches} mismatches, "
          f"{time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
