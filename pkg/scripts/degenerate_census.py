"""Classify every S-Diophantine quadruple up to N by its vanishing-subsum pattern."""
import argparse
from collections import Counter

from sdioph import SearchConfig, find_tuples, new_prime_set
from sdioph.system import classify_degenerate, sextuple_of


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", default="2,3,5,7,11,13")
    ap.add_argument("--max", type=int, default=500)
    ap.add_argument("--show", action="store_true", help="list the degenerate quadruples")
    args = ap.parse_args()

    S = new_prime_set(int(p) for p in args.primes.split(","))
    quads = find_tuples(SearchConfig(S, args.max, 4))
    census = Counter()
    for q in quads:
        cls = classify_degenerate(sextuple_of(q))
        census[cls.value] += 1
        if args.show and cls.value != "non_degenerate":
            print(q, sextuple_of(q).s, cls.value)
    print(f"S={S} N={args.max}: {len(quads)} quadruples")
    for name, count in sorted(census.items()):
        print(f"  {name:>20}: {count}")


if __name__ == "__main__":
    main()
