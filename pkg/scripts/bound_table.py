"""Tabulate ln A(3,r), ln A(5,r) and the quadruple bound against the printed constants."""
import argparse

from sdioph.bounds import (
    PAPER_A3,
    PAPER_A5,
    PAPER_COROLLARY,
    a_recursive,
    fitted_corollary_constants,
    remark_direct_bound,
    remark_fit,
    theorem_bound,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r-max", type=int, default=20)
    args = ap.parse_args()

    hdr = ("r", "lnA3", "slack", "lnA5", "slack", "ln T", "printed", "ln remark")
    print("{:>3} {:>10} {:>7} {:>11} {:>7} {:>11} {:>9} {:>11}".format(*hdr))
    for r in range(1, args.r_max + 1):
        a3 = a_recursive(3, r).log_e
        a5 = a_recursive(5, r).log_e
        t = theorem_bound(r).log_e
        print("{:>3} {:>10.3f} {:>7.3f} {:>11.3f} {:>7.3f} {:>11.3f} {:>9} {:>11.3f}".format(
            r, a3, PAPER_A3[0] + PAPER_A3[1] * r - a3, a5, PAPER_A5[0] + PAPER_A5[1] * r - a5,
            t, PAPER_COROLLARY[0] + PAPER_COROLLARY[1] * r, remark_direct_bound(r).log_e))
    fit = fitted_corollary_constants(max(2, min(args.r_max, 10)))
    print(f"\nquadruple bound refit: exp({fit.intercept} + {fit.slope} r); printed exp(27398 + 5126 r)")
    c0, c1 = remark_fit(max(2, min(args.r_max, 10)))
    print(f"direct-bound refit:    exp({c0} + {c1} r); printed exp(73801 + 15378 r)")


if __name__ == "__main__":
    main()
