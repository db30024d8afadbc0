"""Batch scanning over primes and parameter grids, and report emission."""
from __future__ import annotations

import csv
import io
import json
import logging
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Iterator, Optional, TextIO

import numpy as np

from . import congruences as cg
from . import sampling
from .hypergeom import batch_unit_series_mod, verify_saalschutz
from .padic import reduce_int
from .report import NOT_APPLICABLE, CheckReport

log = logging.getLogger(__name__)

CHECKS = ("theorem", "alt", "mortenson", "sun", "identities")
IDENTITY_FAMILIES = (
    "abb_recurrence",
    "abb_term",
    "abn",
    "binomial_square",
    "double_sum_swap",
    "lemma1",
    "saalschutz",
)
CSV_HEADER = ("check", "inputs", "computed", "expected", "pass")


@dataclass(frozen=True)
class ScanConfig:
    prime_min: int = 3
    prime_max: int = 97
    denom_max: int = 6
    numer_bound: int = 50
    mod_exponent: int = 2
    checks: tuple[str, ...] = CHECKS
    format: str = "json"
    jobs: int = 1
    seed: int = 0
    samples: int = 50

    def __post_init__(self):
        object.__setattr__(self, "checks", tuple(self.checks))
        if self.prime_min < 3:
            raise ValueError("prime_min must be >= 3")
        if self.denom_max < 1 or self.numer_bound < 1:
            raise ValueError("denom_max and numer_bound must be >= 1")
        if self.mod_exponent < 1:
            raise ValueError("mod_exponent must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.samples < 0:
            raise ValueError("samples must be >= 0")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.format not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        # prime_min > prime_max is an empty range, not an error


@dataclass
class ScanSummary:
    total_checks: int = 0
    passes: int = 0
    failures: int = 0
    not_applicable: int = 0
    failures_detail: list[CheckReport] = field(default_factory=list)
    reports: Optional[list[CheckReport]] = None

    def add(self, report: CheckReport) -> None:
        self.total_checks += 1
        if report.passed is None:
            self.not_applicable += 1
        elif report.passed:
            self.passes += 1
        else:
            self.failures += 1
            self.failures_detail.append(report)
        if self.reports is not None:
            self.reports.append(report)

    def to_dict(self) -> dict:
        return {
            "total_checks": self.total_checks,
            "passes": self.passes,
            "failures": self.failures,
            "not_applicable": self.not_applicable,
            "failures_detail": [r.to_dict() for r in self.failures_detail],
        }


def sieve_primes(lo: int, hi: int) -> list[int]:
    """Primes in [lo, hi], ascending."""
    if lo < 2 or hi < lo:
        raise ValueError(f"invalid prime range [{lo}, {hi}]")
    flags = bytearray([1]) * (hi + 1)
    flags[0:2] = b"\x00\x00"
    for q in range(2, int(hi**0.5) + 1):
        if flags[q]:
            flags[q * q :: q] = bytearray(len(range(q * q, hi + 1, q)))
    return [n for n in range(lo, hi + 1) if flags[n]]


def parameter_grid(p: int, denom_max: int, numer_bound: int) -> list[Fraction]:
    """Sorted p-integral rationals a/d in lowest terms, d <= denom_max, |a| <= numer_bound."""
    vals = {
        Fraction(a, d)
        for d in range(1, denom_max + 1)
        for a in range(-numer_bound, numer_bound + 1)
        if gcd(a, d) == 1 and d % p != 0
    }
    return sorted(vals)


def enumerate_params(p: int, cfg: ScanConfig) -> tuple[list[tuple[Fraction, Fraction]], list[tuple[Fraction, Fraction]]]:
    """Split the grid pairs into (hypothesis holds, hypothesis fails) for the theorem."""
    grid = parameter_grid(p, cfg.denom_max, cfg.numer_bound)
    res = {x: reduce_int(x, p) for x in grid}
    good, bad = [], []
    for x in grid:
        for y in grid:
            ok = res[x] >= 1 and res[y] >= 1 and res[x] + res[y] <= p
            (good if ok else bad).append((x, y))
    return good, bad


# --- work units -----------------------------------------------------------


def _residue_text(p: int, e: int) -> Callable[[int], str]:
    return lambda v: f"{v} (mod {p}^{e})"


def pair_reports(check: str, p: int, cfg: ScanConfig) -> list[CheckReport]:
    """Theorem or alternate-form sums over every grid pair, vectorized."""
    e = cfg.mod_exponent
    m = p**e
    grid = parameter_grid(p, cfg.denom_max, cfg.numer_bound)
    if not grid:
        return []
    text = [str(x) for x in grid]
    mod_m = np.array([reduce_int(x, m) for x in grid], dtype=object)
    mod_p = np.array([reduce_int(x, p) for x in grid], dtype=np.int64)
    ia, ib = np.meshgrid(np.arange(len(grid)), np.arange(len(grid)), indexing="ij")
    ia, ib = ia.ravel(), ib.ravel()
    if check == "theorem":
        uppers = [mod_m[ia], mod_m[ib], 1 - mod_m[ia] - mod_m[ib]]
        ra, rb = mod_p[ia], mod_p[ib]
        applies = (ra >= 1) & (rb >= 1) & (ra + rb <= p)
        names = ("alpha", "beta")
    else:
        uppers = [-mod_m[ia], -mod_m[ib], 1 + mod_m[ia] + mod_m[ib]]
        applies = mod_p[ia] + mod_p[ib] >= p
        names = ("a", "b")
    uppers = [u % m for u in uppers]
    if m * m < 2**63:
        values = batch_unit_series_mod([u.astype(np.int64) for u in uppers], 2, p, m)
    else:
        values = batch_unit_series_mod_slow(uppers, 2, p, m)
    fmt = _residue_text(p, e)
    zero = fmt(0)
    sp = str(p)
    out = []
    for i, j, v, ok in zip(ia.tolist(), ib.tolist(), values.tolist(), applies.tolist()):
        inputs = {"p": sp, names[0]: text[i], names[1]: text[j]}
        if ok:
            out.append(CheckReport(check, inputs, fmt(v), zero, v == 0))
        else:
            out.append(CheckReport(check, inputs, fmt(v), NOT_APPLICABLE, None, "hypothesis not satisfied"))
    return out


def batch_unit_series_mod_slow(uppers, lower_count: int, n: int, modulus: int) -> np.ndarray:
    """Object-dtype fallback of batch_unit_series_mod for moduli beyond int64."""
    num = np.ones(len(uppers[0]), dtype=object)
    total = np.zeros(len(uppers[0]), dtype=object)
    fact = 1
    for k in range(n):
        inv = pow(pow(fact, lower_count + 1, modulus), -1, modulus)
        total = (total + num * inv) % modulus
        for u in uppers:
            num = num * ((u + k) % modulus) % modulus
        fact = fact * (k + 1) % modulus
    return total


def _sun_group(p: int, cfg: ScanConfig) -> list[CheckReport]:
    return [cg.verify_sun(x, p, cfg.mod_exponent) for x in parameter_grid(p, cfg.denom_max, cfg.numer_bound)]


def identity_reports(family: str, cfg: ScanConfig) -> list[CheckReport]:
    seed, n = cfg.seed, cfg.samples
    if family == "lemma1":
        return [cg.lemma1_identity(a, b) for a, b in sampling.sample_lemma1(seed, n)]
    if family == "abb_recurrence":
        return [cg.abb_recurrence(a, b) for a, b in sampling.sample_abb_recurrence(seed, n)]
    if family == "abb_term":
        return [cg.abb_term_identity(*t) for t in sampling.sample_abb_term(seed, n)]
    if family == "abn":
        # spread the samples over n = 0..20
        per = max(1, n // 21) if n else 0
        return [cg.abn_identity(k, a) for k in range(21) for a in sampling.sample_abn(seed, per, k)]
    if family == "binomial_square":
        return [cg.binomial_square_identity(a, b) for a, b in sampling.sample_binomial_square(seed, n)]
    if family == "double_sum_swap":
        return [cg.double_sum_swap(a, b) for a, b in sampling.sample_double_sum_swap(seed, n)]
    if family == "saalschutz":
        return [verify_saalschutz(*t) for t in sampling.sample_saalschutz(seed, n)]
    raise ValueError(f"unknown identity family {family!r}")


def _run_group(unit: tuple[str, int, ScanConfig]) -> list[CheckReport]:
    check, p, cfg = unit
    try:
        if check in ("theorem", "alt_form"):
            # generated in (alpha, beta) order already
            return pair_reports(check, p, cfg)
        elif check == "mortenson":
            reports = cg.verify_mortenson(p)
        elif check == "sun":
            reports = _sun_group(p, cfg)
        else:
            reports = identity_reports(check, cfg)
    except Exception as exc:  # surfaced as a failure, never dropped
        log.exception("work unit %s p=%s failed", check, p)
        return [CheckReport(check, {"p": str(p)}, f"error: {exc!r}", "no error", False, "worker error")]
    return sorted(reports, key=CheckReport.sort_key)


def work_units(cfg: ScanConfig) -> list[tuple[str, int, ScanConfig]]:
    """One unit per (check name, prime), in report order."""
    primes = sieve_primes(cfg.prime_min, cfg.prime_max) if cfg.prime_min <= cfg.prime_max else []
    units = []
    for check in cfg.checks:
        if check == "theorem":
            units += [("theorem", p, cfg) for p in primes]
        elif check == "alt":
            units += [("alt_form", p, cfg) for p in primes]
        elif check == "mortenson":
            units += [("mortenson", p, cfg) for p in primes if p >= 5]
        elif check == "sun":
            units += [("sun", p, cfg) for p in primes]
        elif check == "identities":
            units += [(f, 0, cfg) for f in IDENTITY_FAMILIES]
    return sorted(units, key=lambda u: (u[0], u[1]))


def iter_scan(cfg: ScanConfig) -> Iterator[CheckReport]:
    """Reports in deterministic order: check name, prime, inputs."""
    units = work_units(cfg)
    if cfg.jobs == 1 or len(units) <= 1:
        for unit in units:
            yield from _run_group(unit)
        return
    with multiprocessing.get_context("spawn").Pool(cfg.jobs) as pool:
        for reports in pool.imap(_run_group, units, chunksize=1):
            yield from reports


def run_scan(cfg: ScanConfig, sink: Optional[Callable[[CheckReport], None]] = None, keep_reports: bool = False) -> ScanSummary:
    summary = ScanSummary(reports=[] if keep_reports else None)
    for report in iter_scan(cfg):
        summary.add(report)
        if sink is not None:
            sink(report)
    log.info(
        "scan done: %d checks, %d pass, %d fail, %d n/a",
        summary.total_checks, summary.passes, summary.failures, summary.not_applicable,
    )
    return summary


# --- emission -------------------------------------------------------------


def _csv_pass(passed: Optional[bool]) -> str:
    return "n/a" if passed is None else ("true" if passed else "false")


class ReportWriter:
    """Streams reports as JSON lines (summary object last) or CSV."""

    def __init__(self, stream: TextIO, fmt: str = "json"):
        if fmt not in ("json", "csv"):
            raise ValueError("format must be json or csv")
        self.stream = stream
        self.fmt = fmt
        if fmt == "csv":
            self._csv = csv.writer(stream, lineterminator="\n")
            self._csv.writerow(CSV_HEADER)

    def write(self, report: CheckReport) -> None:
        if self.fmt == "json":
            self.stream.write(report.to_json() + "\n")
        else:
            inputs = ";".join(f"{k}={v}" for k, v in report.inputs.items())
            self._csv.writerow((report.check, inputs, report.computed, report.expected, _csv_pass(report.passed)))

    def finish(self, summary: ScanSummary) -> None:
        if self.fmt == "json":
            self.stream.write(json.dumps({"summary": summary.to_dict()}, separators=(",", ":")) + "\n")


def emit_report(summary: ScanSummary, fmt: str = "json", reports: Optional[Iterable[CheckReport]] = None) -> bytes:
    """Render a summary (and its reports) to bytes, sorted deterministically."""
    if reports is None:
        reports = summary.reports or []
    buf = io.StringIO()
    writer = ReportWriter(buf, fmt)
    for r in sorted(reports, key=CheckReport.sort_key):
        writer.write(r)
    writer.finish(summary)
    return buf.getvalue().encode()
