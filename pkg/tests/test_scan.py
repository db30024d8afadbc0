import csv
import io
import json
from fractions import Fraction

import pytest

from oracles import primes_by_trial
from supercong.report import CheckReport
from supercong.scan import (
    ScanConfig,
    ScanSummary,
    emit_report,
    enumerate_params,
    parameter_grid,
    run_scan,
    sieve_primes,
    work_units,
)

F = Fraction
SMALL = dict(prime_max=13, denom_max=2, numer_bound=4, samples=6)


def test_sieve_examples():
    assert sieve_primes(3, 10) == [3, 5, 7]
    assert sieve_primes(5, 5) == [5]
    assert sieve_primes(90, 100) == [97] == primes_by_trial(90, 100)
    assert sieve_primes(2, 1000) == primes_by_trial(2, 1000)
    with pytest.raises(ValueError):
        sieve_primes(10, 3)
    with pytest.raises(ValueError):
        sieve_primes(1, 3)


def test_enumerate_params_examples():
    good, bad = enumerate_params(5, ScanConfig(denom_max=1, numer_bound=4))
    assert (F(1), F(1)) in good
    good, bad = enumerate_params(5, ScanConfig(denom_max=2, numer_bound=4))
    assert (F(1, 2), F(1, 2)) in bad
    good, bad = enumerate_params(7, ScanConfig(denom_max=2, numer_bound=4))
    assert (F(1, 2), F(3)) in good


def test_grid_is_p_integral_and_reduced():
    grid = parameter_grid(5, 6, 12)
    assert all(x.denominator % 5 for x in grid)
    assert grid == sorted(set(grid))
    assert F(1, 5) not in grid and F(2, 3) in grid and F(-12, 1) in grid


def test_config_validation():
    for bad in (dict(prime_min=2), dict(jobs=0), dict(denom_max=0), dict(checks=("nope",)), dict(format="xml")):
        with pytest.raises(ValueError):
            ScanConfig(**bad)


def test_scan_theorem_small():
    s = run_scan(ScanConfig(prime_max=31, denom_max=2, numer_bound=6, checks=("theorem",)))
    assert s.failures == 0 and s.passes > 0
    assert s.total_checks == s.passes + s.failures + s.not_applicable


def test_scan_mortenson():
    s = run_scan(ScanConfig(prime_min=5, prime_max=31, checks=("mortenson",)))
    assert s.failures == 0 and s.passes == 4 * len(sieve_primes(5, 31))


def test_scan_empty_range():
    s = run_scan(ScanConfig(prime_min=24, prime_max=28, checks=("theorem", "sun")))
    assert s.total_checks == 0
    s = run_scan(ScanConfig(prime_min=50, prime_max=40, checks=("theorem",)))
    assert s.total_checks == 0


def test_scan_completeness():
    cfg = ScanConfig(checks=("theorem",), **SMALL)
    s = run_scan(cfg, keep_reports=True)
    seen = [(r.prime, r.inputs["alpha"], r.inputs["beta"]) for r in s.reports]
    assert len(seen) == len(set(seen))
    expected = set()
    for p in sieve_primes(3, 13):
        good, bad = enumerate_params(p, cfg)
        assert len({*good, *bad}) == len(good) + len(bad)
        expected |= {(p, str(a), str(b)) for a, b in good + bad}
        assert sum(1 for r in s.reports if r.prime == p and r.passed is not None) == len(good)
    assert set(seen) == expected


def test_scan_batch_matches_scalar_verifier():
    from supercong.congruences import verify_alt_form, verify_main_theorem

    s = run_scan(ScanConfig(checks=("theorem", "alt"), prime_max=11, denom_max=3, numer_bound=5), keep_reports=True)
    for r in s.reports[::7]:
        if r.check == "theorem":
            ref = verify_main_theorem(F(r.inputs["alpha"]), F(r.inputs["beta"]), r.prime)
        else:
            ref = verify_alt_form(F(r.inputs["a"]), F(r.inputs["b"]), r.prime)
        assert (r.computed, r.passed) == (ref.computed, ref.passed)


def test_large_modulus_uses_object_fallback():
    from supercong import scan as scan_mod
    from supercong.congruences import verify_main_theorem

    # 11^10 exceeds int64, so the group goes through the object-dtype kernel
    cfg = ScanConfig(checks=("theorem",), denom_max=2, numer_bound=3, mod_exponent=5)
    reports = scan_mod.pair_reports("theorem", 11, cfg)
    assert reports
    for r in reports[::5]:
        ref = verify_main_theorem(F(r.inputs["alpha"]), F(r.inputs["beta"]), 11, exponent=5)
        assert (r.computed, r.passed) == (ref.computed, ref.passed)


def test_determinism_across_jobs():
    cfg1 = ScanConfig(jobs=1, **SMALL)
    cfg3 = ScanConfig(jobs=3, **SMALL)
    s1 = run_scan(cfg1, keep_reports=True)
    s3 = run_scan(cfg3, keep_reports=True)
    for fmt in ("json", "csv"):
        assert emit_report(s1, fmt) == emit_report(s3, fmt)
    assert emit_report(s1) == emit_report(run_scan(cfg1, keep_reports=True))


def test_scan_order_is_sorted():
    s = run_scan(ScanConfig(**SMALL), keep_reports=True)
    keys = [r.sort_key() for r in s.reports]
    assert keys == sorted(keys)
    assert [u[:2] for u in work_units(ScanConfig(**SMALL))] == sorted(u[:2] for u in work_units(ScanConfig(**SMALL)))


def test_worker_error_surfaces(monkeypatch):
    from supercong import scan as scan_mod

    def boom(p, cfg):
        raise RuntimeError("kaboom")

    monkeypatch.setattr(scan_mod, "_sun_group", boom)
    s = run_scan(ScanConfig(checks=("sun",), prime_max=7))
    assert s.failures == 3
    assert "kaboom" in s.failures_detail[0].computed


def test_emit_empty_csv():
    assert emit_report(ScanSummary(), "csv") == b"check,inputs,computed,expected,pass\n"


def test_emit_one_passing():
    s = ScanSummary(reports=[])
    s.add(CheckReport("theorem", {"p": "7", "alpha": "1", "beta": "1"}, "0 (mod 7^2)", "0 (mod 7^2)", True))
    lines = emit_report(s, "json").decode().splitlines()
    assert len(lines) == 2
    row = json.loads(lines[0])
    assert row == {
        "check": "theorem",
        "inputs": {"p": "7", "alpha": "1", "beta": "1"},
        "computed": "0 (mod 7^2)",
        "expected": "0 (mod 7^2)",
        "pass": True,
    }
    assert json.loads(lines[1])["summary"]["passes"] == 1
    rows = list(csv.reader(io.StringIO(emit_report(s, "csv").decode())))
    assert rows == [["check", "inputs", "computed", "expected", "pass"], ["theorem", "p=7;alpha=1;beta=1", "0 (mod 7^2)", "0 (mod 7^2)", "true"]]


def test_emit_sorted_fixture():
    rows = [
        CheckReport("theorem", {"p": "11", "alpha": "1", "beta": "2"}, "x", "x", True),
        CheckReport("sun", {"p": "5", "alpha": "1/2"}, "y", "z", False),
        CheckReport("theorem", {"p": "11", "alpha": "-1/2", "beta": "2"}, "w", "n/a", None),
    ]
    s = ScanSummary(reports=[])
    for r in rows:
        s.add(r)
    out = [json.loads(l) for l in emit_report(s).decode().splitlines()[:-1]]
    assert [(o["check"], o["inputs"].get("alpha")) for o in out] == [("sun", "1/2"), ("theorem", "-1/2"), ("theorem", "1")]
    assert out[2]["pass"] is True and out[1]["pass"] is None
    assert s.total_checks == 3 and s.failures == 1 and s.not_applicable == 1
