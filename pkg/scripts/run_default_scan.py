#!/usr/bin/env python3
"""Run the default scan (primes 3..97, d <= 6, |a| <= 50) and write a CSV report.

Usage: python scripts/run_default_scan.py [--jobs J] [--out reports/scan.csv]
"""
import argparse
import sys
import time
from pathlib import Path

from supercong.scan import ReportWriter, ScanConfig, run_scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="reports/scan.csv")
    ap.add_argument("--checks", default="theorem,alt,mortenson,sun,identities")
    args = ap.parse_args()

    cfg = ScanConfig(checks=tuple(args.checks.split(",")), format="csv", jobs=args.jobs)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    with out.open("w", newline="") as fh:
        writer = ReportWriter(fh, "csv")
        summary = run_scan(cfg, sink=writer.write)
    dt = time.perf_counter() - t0
    print(f"{summary.total_checks} checks: {summary.passes} pass, {summary.failures} fail, "
          f"{summary.not_applicable} n/a  ({dt:.1f}s) -> {out}")
    for r in summary.failures_detail[:10]:
        print("  FAIL", r.to_json())
    return 1 if summary.failures else 0


if __name__ == "__main__":
    sys.exit(main())
