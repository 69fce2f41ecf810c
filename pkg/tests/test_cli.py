"""Command-line interface: schemas, determinism, exit codes."""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from entroineq import HalfInt, wigner_oracle
from entroineq.cli import main


def run_to_file(tmp_path, name, argv):
    out = tmp_path / name
    code = main(argv + ["--out", str(out)])
    return code, out.read_bytes()


def parse_csv(data: bytes):
    lines = data.decode("utf-8").strip().split("\n")
    header = lines[0].split(",")
    rows = [line.split(",") for line in lines[1:]]
    return header, rows


class TestDmat:
    def test_identity_csv(self, capsys):
        code = main(["dmat", "--j", "1/2", "--theta", "0"])
        assert code == 0
        out = capsys.readouterr().out
        assert out == "m_prime,m=-1/2,m=1/2\n-1/2,1,0\n1/2,0,1\n"

    def test_matches_oracle(self, tmp_path):
        code, data = run_to_file(tmp_path, "d.csv", ["dmat", "--j", "2", "--theta", "1.0"])
        assert code == 0
        header, rows = parse_csv(data)
        assert header[0] == "m_prime"
        got = np.array([[float(v) for v in row[1:]] for row in rows])
        assert np.max(np.abs(got - wigner_oracle(HalfInt(4), 1.0))) < 1e-12

    def test_near_half_turn(self, tmp_path):
        code, data = run_to_file(
            tmp_path, "d.csv", ["dmat", "--j", "3/2", "--theta", "3.14159"]
        )
        assert code == 0
        _, rows = parse_csv(data)
        got = np.array([[float(v) for v in row[1:]] for row in rows])
        anti = np.abs(np.fliplr(got))
        assert np.max(np.abs(anti - np.eye(4))) < 1e-4

    def test_bad_spin_is_usage_error(self, capsys):
        assert main(["dmat", "--j", "nope", "--theta", "0"]) == 2
        assert "error:" in capsys.readouterr().err


class TestSu2Check:
    def test_single_point_zero(self, tmp_path):
        code, data = run_to_file(
            tmp_path, "s.csv", ["su2-check", "--j", "3/2", "--m", "3/2", "--grid", "0:0:1"]
        )
        assert code == 0
        header, rows = parse_csv(data)
        assert header == ["theta", "h_joint", "h1", "h2", "lhs", "slack"]
        assert abs(float(rows[0][5])) <= 1e-9

    def test_full_sweep_exit_zero(self, tmp_path):
        code, data = run_to_file(
            tmp_path,
            "s.csv",
            ["su2-check", "--j", "2", "--m", "2", "--grid", "0:6.2832:256"],
        )
        assert code == 0
        _, rows = parse_csv(data)
        assert len(rows) == 256
        slacks = [float(r[5]) for r in rows]
        assert min(slacks) >= -1e-10
        # equality only approached near 0, pi, 2 pi
        for theta, slack in ((float(r[0]), float(r[5])) for r in rows):
            if min(abs(theta - root) for root in (0.0, math.pi, 2 * math.pi)) > 1.0:
                assert slack > 1e-3

    def test_lhs_column_consistent(self, tmp_path):
        _, data = run_to_file(
            tmp_path, "s.csv", ["su2-check", "--j", "3/2", "--m", "1/2", "--grid", "0.3:2.1:5"]
        )
        _, rows = parse_csv(data)
        for row in rows:
            assert float(row[4]) == pytest.approx(float(row[2]) + float(row[3]), abs=1e-16)


class TestSu2Tsallis:
    def test_asserted_sweep(self, tmp_path):
        code, data = run_to_file(
            tmp_path,
            "t.csv",
            ["su2-tsallis", "--j", "3/2", "--m", "3/2", "--q", "2", "--grid", "0:6.2832:64"],
        )
        assert code == 0
        header, rows = parse_csv(data)
        assert header[-1] == "mode"
        assert all(r[-1] == "asserted" for r in rows)
        assert min(float(r[5]) for r in rows) >= -1e-12

    def test_report_only_below_one(self, tmp_path):
        code, data = run_to_file(
            tmp_path,
            "t.csv",
            ["su2-tsallis", "--j", "2", "--m", "2", "--q", "0.5", "--grid", "0:3:4"],
        )
        assert code == 0
        _, rows = parse_csv(data)
        assert all(r[-1] == "report_only" for r in rows)

    def test_q_one_is_usage_error(self, capsys):
        code = main(["su2-tsallis", "--j", "2", "--m", "2", "--q", "1", "--grid", "0:1:2"])
        assert code == 2
        assert "q must be" in capsys.readouterr().err


class TestSu11Check:
    def test_discrete_sweep(self, tmp_path):
        code, data = run_to_file(
            tmp_path,
            "u.csv",
            ["su11-check", "--k", "2", "--m", "1", "--grid", "0.1:1.5:8"],
        )
        assert code == 0
        header, rows = parse_csv(data)
        assert header == ["t", "truncation", "captured_mass", "h_joint", "h1", "h2", "slack"]
        assert len(rows) == 8
        for row in rows:
            assert abs(float(row[2]) - 1.0) <= 1e-8
            assert float(row[6]) >= -1e-10

    def test_zero_rapidity_row(self, tmp_path):
        code, data = run_to_file(
            tmp_path, "u.csv", ["su11-check", "--k", "2", "--m", "1", "--grid", "0:0:1"]
        )
        assert code == 0
        _, rows = parse_csv(data)
        assert abs(float(rows[0][6])) <= 1e-9

    def test_continuous_report_only(self, tmp_path):
        code, data = run_to_file(
            tmp_path,
            "u.csv",
            [
                "su11-check", "--series", "continuous", "--s", "0.5", "--sigma", "0",
                "--m", "0.5", "--truncation", "32", "--grid", "0.1:0.5:3",
            ],
        )
        assert code == 0
        header, rows = parse_csv(data)
        assert header[2] == "raw_mass"
        assert len(rows) == 3
        assert all(float(r[2]) > 0.0 for r in rows)

    def test_missing_k_is_usage_error(self, capsys):
        code = main(["su11-check", "--m", "1", "--grid", "0.1:1:2"])
        assert code == 2
        capsys.readouterr()

    def test_domain_error_exit(self, capsys):
        code = main(["su11-check", "--k", "2", "--m", "1", "--grid", "0.5:2.5:3"])
        assert code == 2
        assert "error:" in capsys.readouterr().err


class TestHyp2f1Command:
    def test_binomial_point(self, capsys):
        code = main(["hyp2f1", "--a", "1", "--b", "2", "--c", "2", "--z", "0.5"])
        assert code == 0
        out = capsys.readouterr().out
        assert out == "re,im\n2,0\n"

    def test_origin(self, capsys):
        code = main(["hyp2f1", "--a", "0.3", "--b", "-1.2", "--c", "0.7", "--z", "0"])
        assert code == 0
        assert capsys.readouterr().out == "re,im\n1,0\n"

    def test_terminating_polynomial(self, capsys):
        code = main(["hyp2f1", "--a", "-2", "--b", "3", "--c", "1", "--z", "0.7"])
        assert code == 0
        header, rows = capsys.readouterr().out.strip().split("\n")
        assert float(rows.split(",")[0]) == pytest.approx(-0.26, abs=1e-13)

    def test_convergence_domain_exit(self, capsys):
        code = main(["hyp2f1", "--a", "0.5", "--b", "0.5", "--c", "1.5", "--z", "0.97"])
        assert code == 2
        assert "error:" in capsys.readouterr().err


class TestOutputContracts:
    DOCUMENTED = (
        ["dmat", "--j", "1/2", "--theta", "0"],
        ["dmat", "--j", "2", "--theta", "1.0"],
        ["su2-check", "--j", "3/2", "--m", "3/2", "--grid", "0:6.2832:256"],
        ["su2-check", "--j", "2", "--m", "2", "--grid", "0:6.2832:256"],
        ["su2-tsallis", "--j", "3/2", "--m", "3/2", "--q", "2", "--grid", "0:6.2832:64"],
        ["su11-check", "--k", "2", "--m", "1", "--grid", "0.1:1.5:8"],
        [
            "su11-check", "--series", "continuous", "--s", "0.5", "--sigma", "0",
            "--m", "0.5", "--truncation", "32", "--grid", "0.1:0.5:3",
        ],
        ["hyp2f1", "--a", "1", "--b", "2", "--c", "2", "--z", "0.5"],
    )

    def test_csv_is_deterministic(self, tmp_path):
        for argv in self.DOCUMENTED:
            code_a, first = run_to_file(tmp_path, "a.csv", list(argv))
            code_b, second = run_to_file(tmp_path, "b.csv", list(argv))
            assert code_a == code_b == 0
            assert first == second

    def test_csv_is_lf_utf8(self, tmp_path):
        _, data = run_to_file(
            tmp_path, "c.csv", ["su2-check", "--j", "1", "--m", "0", "--grid", "0:3:4"]
        )
        assert b"\r" not in data
        data.decode("utf-8")

    def test_json_round_trip(self, tmp_path):
        code, data = run_to_file(
            tmp_path,
            "r.json",
            [
                "su2-check", "--j", "3/2", "--m", "3/2", "--grid", "0.2:2.8:7",
                "--format", "json",
            ],
        )
        assert code == 0
        payload = json.loads(data)
        assert payload["config"]["command"] == "su2-check"
        for row in payload["rows"]:
            assert row["slack"] == row["h1"] + row["h2"] - row["h_joint"]
            assert row["lhs"] == row["h1"] + row["h2"]

    def test_module_entry_point(self, tmp_path):
        out = tmp_path / "sub.csv"
        proc = subprocess.run(
            [
                sys.executable, "-m", "entroineq",
                "su2-check", "--j", "1", "--m", "1", "--grid", "0:1:3",
                "--out", str(out),
            ],
            capture_output=True,
        )
        assert proc.returncode == 0
        assert out.exists()
