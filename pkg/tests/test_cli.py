import json
import subprocess
import sys

import pytest

from gwbinom.cli import main
from gwbinom.coefficients import triangle, triangle_from_json, triangle_to_json


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_coeff_untwisted(capsys):
    code, out, _ = run(capsys, "coeff", "--n", "8", "--j", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "55+u"
    assert lines[1] == "rank=56 disc=nonsquare"


def test_coeff_twisted(capsys):
    code, out, _ = run(capsys, "coeff", "--twisted", "--j", "4")
    assert code == 0
    assert out.splitlines()[0] == "69+u"


def test_coeff_with_oracle(capsys):
    code, out, _ = run(capsys, "coeff", "--n", "4", "--j", "1", "--oracle")
    assert code == 0
    assert "oracle=3+u agree=yes" in out


def test_coeff_json(capsys):
    code, out, _ = run(capsys, "coeff", "--n", "8", "--j", "3", "--oracle", "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["value"]["display"] == "55+u"
    assert blob["value"]["rank"] == 56
    assert blob["oracle"]["display"] == "55+u"
    assert blob["agree"] is True


def test_coeff_csv(capsys):
    code, out, _ = run(capsys, "coeff", "--n", "8", "--j", "3", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,j,twisted,method,rank,disc,display"
    assert lines[1] == "8,3,False,closed,56,nonsquare,55+u"


def test_coeff_usage_errors(capsys):
    code, _, err = run(capsys, "coeff", "--n", "3", "--j", "5")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "coeff", "--j", "2")
    assert code == 2
    code, _, err = run(capsys, "coeff", "--twisted", "--n", "5", "--j", "4")
    assert code == 2


def test_triangle_text_golden(capsys):
    code, out, _ = run(capsys, "triangle", "--rows", "9")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert rows[2] == ["1", "1+u", "1"]
    assert rows[4] == ["1", "3+u", "6", "3+u", "1"]
    assert rows[6] == ["1", "5+u", "15", "20", "15", "5+u", "1"]
    assert rows[8] == ["1", "7+u", "28", "55+u", "70", "55+u", "28", "7+u", "1"]


def test_triangle_single_row(capsys):
    code, out, _ = run(capsys, "triangle", "--rows", "1")
    assert code == 0
    assert out == "1\n"


def test_triangle_json_roundtrip(capsys):
    code, out, _ = run(capsys, "triangle", "--rows", "7", "--format", "json")
    assert code == 0
    assert triangle_from_json(json.loads(out)) == triangle(7)


def test_triangle_csv_row_count(capsys):
    rows = 9
    code, out, _ = run(capsys, "triangle", "--rows", str(rows), "--format", "csv")
    assert code == 0
    lines = out.split("\n")
    assert lines[-1] == ""  # trailing LF
    assert len(lines) - 2 == rows * (rows + 1) // 2  # header + cells


def test_twisted_sequence(capsys):
    code, out, _ = run(capsys, "twisted", "--max-j", "8")
    assert code == 0
    values = [line.split("\t")[1] for line in out.splitlines()]
    assert values == ["2", "5+u", "20", "69+u", "252", "924", "3432", "12869+u"]


def test_twisted_sequence_with_oracle(capsys):
    code, out, _ = run(capsys, "twisted", "--max-j", "4", "--oracle")
    assert code == 0
    assert all("agree=yes" in line for line in out.splitlines())


def test_necklaces_json_catalog(capsys):
    code, out, _ = run(capsys, "necklaces", "--n", "4", "--j", "2")
    assert code == 0
    cat = json.loads(out)
    assert [o["period"] for o in cat["orbits"]] == [4, 2]
    code, out, _ = run(capsys, "necklaces", "--n", "5", "--j", "0")
    cat = json.loads(out)
    assert len(cat["orbits"]) == 1 and cat["orbits"][0]["period"] == 1


def test_necklaces_classify(capsys):
    code, out, _ = run(capsys, "necklaces", "--n", "6", "--j", "4", "--classify")
    assert code == 0
    cat = json.loads(out)
    assert cat["classification"] == {"type1_even": 1, "type2_even": 1, "odd_fixed": 1}
    both = [o for o in cat["orbits"] if {a["type"] for a in o["axes"]} == {1, 2}]
    assert len(both) == 1 and both[0]["period"] == 3


def test_necklaces_classify_odd_n_is_usage_error(capsys):
    code, _, err = run(capsys, "necklaces", "--n", "5", "--j", "2", "--classify")
    assert code == 2 and "error" in err


def test_necklaces_text(capsys):
    code, out, _ = run(capsys, "necklaces", "--n", "4", "--j", "2", "--format", "text")
    assert code == 0
    assert "orbits of (n=4, j=2): 2" in out


def test_necklaces_limit_breach(capsys, monkeypatch):
    monkeypatch.setenv("GWBINOM_MAX_N", "4")
    code, _, err = run(capsys, "necklaces", "--n", "6", "--j", "2")
    assert code == 2 and "enumeration cap" in err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "8", "--twisted-max-j", "4")
    assert code == 0
    assert "VERIFY PASS" in out


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "1", "--twisted-max-j", "0")
    assert code == 0


def test_verify_parallel_jobs(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "6", "--twisted-max-j", "3", "--jobs", "2")
    assert code == 0
    assert "VERIFY PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--twisted-max-j", "2",
                       "--format", "json")
    assert code == 0
    blob = json.loads(out)
    assert blob["pass"] is True
    assert all("seconds" in cell for cell in blob["cells"])


def test_verify_divergence_exit_code(capsys, monkeypatch):
    import gwbinom.coefficients as coefficients

    real = coefficients.untwisted_closed

    def corrupted(n, j):
        if (n, j) == (4, 1):
            return real(4, 2)
        return real(n, j)

    monkeypatch.setattr(coefficients, "untwisted_closed", corrupted)
    code, out, _ = run(capsys, "verify", "--max-n", "4", "--twisted-max-j", "1")
    assert code == 1
    assert "DIVERGENCE" in out


def test_q_flag(capsys):
    code, _, err = run(capsys, "--q", "8", "triangle", "--rows", "2")
    assert code == 2 and "odd" in err
    code, out, _ = run(capsys, "--q", "9", "triangle", "--rows", "2")
    assert code == 0


def test_unknown_command_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2
    assert main([]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_determinism(capsys):
    first = run(capsys, "necklaces", "--n", "8", "--j", "4", "--classify")
    second = run(capsys, "necklaces", "--n", "8", "--j", "4", "--classify")
    assert first == second
    first = run(capsys, "triangle", "--rows", "9", "--format", "json")
    second = run(capsys, "triangle", "--rows", "9", "--format", "json")
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gwbinom", "coeff", "--n", "2", "--j", "1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "1+u"
