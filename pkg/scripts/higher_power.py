#!/usr/bin/env python3
"""How often does the 3F2 sum vanish mod p^3 when the theorem's hypothesis holds?

Exploratory; prints, per prime, the fraction of hypothesis-satisfying grid
pairs whose residue mod p^3 is zero.
"""
import sys

from supercong.scan import ScanConfig, pair_reports, sieve_primes


def main(pmax=41):
    cfg = ScanConfig(checks=("theorem",), denom_max=4, numer_bound=20, mod_exponent=3)
    print(f"{'p':>4} {'applicable':>10} {'zero mod p^3':>13}")
    for p in sieve_primes(3, pmax):
        reports = [r for r in pair_reports("theorem", p, cfg) if r.passed is not None]
        zero = sum(r.passed for r in reports)
        print(f"{p:>4} {len(reports):>10} {zero:>13}  ({zero / max(1, len(reports)):.3f})")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 41)
