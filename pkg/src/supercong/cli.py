"""Command-line interface.

Exit status: 0 when nothing failed, 1 when some check failed, 2 on a usage
or configuration error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from contextlib import contextmanager

from . import congruences as cg
from .padic import is_prime
from .rational import parse_rational
from .scan import CHECKS, ReportWriter, ScanConfig, ScanSummary, identity_reports, IDENTITY_FAMILIES, run_scan, sieve_primes


class UsageError(Exception):
    pass


def _rational(text: str):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _prime(text: str) -> int:
    p = int(text)
    if p < 3 or not is_prime(p):
        raise argparse.ArgumentTypeError(f"{text} is not an odd prime")
    return p


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _emit(reports, fmt: str, out_path=None) -> int:
    summary = ScanSummary()
    with _output(out_path) as fh:
        writer = ReportWriter(fh, fmt)
        for r in reports:
            summary.add(r)
            writer.write(r)
        writer.finish(summary)
    return 1 if summary.failures else 0


def cmd_theorem(args) -> int:
    return _emit([cg.verify_main_theorem(args.alpha, args.beta, args.p, args.mod_exp)], args.format)


def cmd_sun(args) -> int:
    return _emit([cg.verify_sun(args.alpha, args.p, args.mod_exp)], args.format)


def cmd_mortenson(args) -> int:
    if args.prime_min < 5:
        raise UsageError("Mortenson's congruences need primes >= 5")
    primes = sieve_primes(args.prime_min, args.prime_max) if args.prime_min <= args.prime_max else []
    return _emit([r for p in primes for r in cg.verify_mortenson(p)], args.format)


def cmd_identities(args) -> int:
    cfg = ScanConfig(seed=args.seed, samples=args.samples)
    return _emit([r for fam in IDENTITY_FAMILIES for r in identity_reports(fam, cfg)], args.format)


def cmd_scan(args) -> int:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    cfg = ScanConfig(
        prime_min=args.prime_min,
        prime_max=args.prime_max,
        denom_max=args.denom_max,
        numer_bound=args.numer_bound,
        mod_exponent=args.mod_exp,
        checks=checks,
        format=args.format,
        jobs=args.jobs,
        seed=args.seed,
        samples=args.samples,
    )
    with _output(args.out) as fh:
        writer = ReportWriter(fh, cfg.format)
        summary = run_scan(cfg, sink=writer.write)
        writer.finish(summary)
    return 1 if summary.failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercong", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("theorem", help="check the 3F2 congruence for one (alpha, beta, p)")
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--alpha", type=_rational, required=True)
    sp.add_argument("--beta", type=_rational, required=True)
    sp.add_argument("--mod-exp", type=int, default=2)
    common(sp)
    sp.set_defaults(func=cmd_theorem)

    sp = sub.add_parser("sun", help="check the 2F1[alpha, 1-alpha; 1] congruence")
    sp.add_argument("--p", type=_prime, required=True)
    sp.add_argument("--alpha", type=_rational, required=True)
    sp.add_argument("--mod-exp", type=int, default=2)
    common(sp)
    sp.set_defaults(func=cmd_sun)

    sp = sub.add_parser("mortenson", help="check the four 2F1 Legendre-symbol congruences")
    sp.add_argument("--prime-min", type=int, default=5)
    sp.add_argument("--prime-max", type=int, default=199)
    common(sp)
    sp.set_defaults(func=cmd_mortenson)

    sp = sub.add_parser("identities", help="seeded samples of the exact identities")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=50)
    common(sp)
    sp.set_defaults(func=cmd_identities)

    d = ScanConfig()
    sp = sub.add_parser("scan", help="batch scan over primes and a parameter grid")
    sp.add_argument("--prime-min", type=int, default=d.prime_min)
    sp.add_argument("--prime-max", type=int, default=d.prime_max)
    sp.add_argument("--denom-max", type=int, default=d.denom_max)
    sp.add_argument("--numer-bound", type=int, default=d.numer_bound)
    sp.add_argument("--mod-exp", type=int, default=d.mod_exponent)
    sp.add_argument("--checks", default=",".join(CHECKS), help=f"comma list from {','.join(CHECKS)}")
    sp.add_argument("--jobs", type=int, default=d.jobs)
    sp.add_argument("--seed", type=int, default=d.seed)
    sp.add_argument("--samples", type=int, default=d.samples)
    sp.add_argument("--out", default=None)
    common(sp)
    sp.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
