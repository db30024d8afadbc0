#!/usr/bin/env python3
"""Tabulate the wrap-around step mod p: how often LHS == RHS versus LHS == -RHS.

The lift C(-a-1, p+i) == -C(-a-1, i) (mod p) introduces a sign that the
stated congruence omits; this prints the counts per prime.
"""
import sys

from supercong.congruences import wraparound_reduction
from supercong.scan import sieve_primes


def main(pmax=31):
    print(f"{'p':>4} {'pairs':>6} {'equal':>6} {'negated':>8}")
    for p in sieve_primes(5, pmax):
        eq = neg = total = 0
        for a in range(1, p):
            for b in range(p - a, p):
                r = wraparound_reduction(a, b, p)
                lhs, rhs = int(r.computed.split()[0]), int(r.expected.split()[0])
                total += 1
                eq += lhs == rhs
                neg += lhs == (-rhs) % p
        print(f"{p:>4} {total:>6} {eq:>6} {neg:>8}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 31)
