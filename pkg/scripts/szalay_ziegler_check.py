"""Search for {2,p}-Diophantine quadruples up to a height bound, timing each run.

    python scripts/szalay_ziegler_check.py --max 100000 --odd-primes 3,5,7,11,13
"""
import argparse
import time

from sdioph import SearchConfig, find_tuples, new_prime_set


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=100000)
    ap.add_argument("--odd-primes", default="3,5,7,11,13,17,19,23")
    ap.add_argument("--partitions", type=int, default=1)
    args = ap.parse_args()

    print(f"{'S':>10} {'triples':>8} {'quadruples':>10} {'seconds':>8}")
    for p in map(int, args.odd_primes.split(",")):
        S = new_prime_set([2, p])
        t0 = time.perf_counter()
        triples = find_tuples(SearchConfig(S, args.max, 3, args.partitions))
        quads = find_tuples(SearchConfig(S, args.max, 4, args.partitions))
        dt = time.perf_counter() - t0
        print(f"{str(S):>10} {len(triples):>8} {len(quads):>10} {dt:>8.2f}")
        for q in quads:
            print("   ", q)


if __name__ == "__main__":
    main()
