import json

import pytest

from supercong.cli import main


def _lines(capsys):
    return [json.loads(l) for l in capsys.readouterr().out.splitlines()]


def test_theorem_pass(capsys):
    assert main(["theorem", "--p", "7", "--alpha", "1/2", "--beta", "3"]) == 0
    rows = _lines(capsys)
    assert rows[0]["pass"] is True and rows[0]["computed"] == "0 (mod 7^2)"
    assert rows[-1]["summary"]["total_checks"] == 1


def test_theorem_not_applicable_exits_zero(capsys):
    assert main(["theorem", "--p", "7", "--alpha", "1/2", "--beta", "1/2"]) == 0
    assert _lines(capsys)[0]["pass"] is None


def test_theorem_failure_exits_one(capsys):
    # mod p^3 the theorem is not claimed; (1/2, 3, p=7) is nonzero there
    code = main(["theorem", "--p", "7", "--alpha", "1/2", "--beta", "3", "--mod-exp", "3"])
    rows = _lines(capsys)
    assert code == 1
    assert rows[0]["pass"] is False and rows[0]["computed"] == "294 (mod 7^3)"
    assert rows[-1]["summary"]["failures_detail"][0]["inputs"]["alpha"] == "1/2"


@pytest.mark.parametrize(
    "argv",
    [
        ["theorem", "--p", "9", "--alpha", "1", "--beta", "1"],
        ["theorem", "--p", "7", "--alpha", "1 /2", "--beta", "1"],
        ["scan", "--jobs", "0"],
        ["scan", "--checks", "theorem,bogus"],
        ["mortenson", "--prime-min", "3"],
        ["nosuch"],
    ],
)
def test_usage_errors_exit_two(argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_sun(capsys):
    assert main(["sun", "--p", "7", "--alpha", "1/3"]) == 0
    assert _lines(capsys)[0]["expected"] == "1 (mod 7^2)"


def test_mortenson_csv(capsys):
    assert main(["mortenson", "--prime-min", "5", "--prime-max", "13", "--format", "csv"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "check,inputs,computed,expected,pass"
    assert len(out) == 1 + 4 * 4


def test_identities(capsys):
    assert main(["identities", "--seed", "3", "--samples", "4"]) == 0
    rows = _lines(capsys)
    assert rows[-1]["summary"]["failures"] == 0
    assert {r["check"] for r in rows[:-1]} >= {"lemma1", "abn", "saalschutz", "double_sum_swap"}


def test_scan_to_file(tmp_path):
    out = tmp_path / "r.csv"
    argv = ["scan", "--prime-max", "11", "--denom-max", "2", "--numer-bound", "3", "--samples", "3", "--format", "csv", "--out", str(out)]
    assert main(argv) == 0
    first = out.read_bytes()
    assert main(argv + ["--jobs", "2"]) == 0
    assert out.read_bytes() == first
    assert first.startswith(b"check,inputs,computed,expected,pass\n")
