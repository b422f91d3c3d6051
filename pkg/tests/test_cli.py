"""End-to-end CLI tests: output formats, determinism, exit codes."""

import csv
import io
import json
import math

import pytest

from landauwall.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestLevels:
    def test_csv_rows(self, capsys):
        code, out, err = run_cli(capsys, ["levels", "--B", "2", "--n-max", "2"])
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [float(r["E"]) for r in rows] == [2.0, 6.0, 10.0]

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, ["levels", "--format", "json",
                                        "--n-max", "1"])
        assert code == 0
        data = json.loads(out)
        assert isinstance(data, list) and len(data) == 2
        assert data[0]["E"] == 1.0


class TestSolve:
    ARGS = ["solve", "--B", "1", "--a", "1.1", "--alpha", "-1",
            "--m", "0", "--gap", "0"]

    def test_known_root(self, capsys):
        code, out, _ = run_cli(capsys, self.ARGS)
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["E"]) == pytest.approx(1.4960234182611493, rel=1e-9)

    def test_byte_identical_reruns(self, capsys):
        _, out1, _ = run_cli(capsys, self.ARGS)
        _, out2, _ = run_cli(capsys, self.ARGS)
        assert out1 == out2

    def test_csv_round_trip_precision(self, capsys):
        _, out, _ = run_cli(capsys, self.ARGS)
        row = next(csv.DictReader(io.StringIO(out)))
        # 17 significant digits: parsing the text recovers the exact double
        from landauwall.landau import Params
        from landauwall.spectrum import ScalarCondition, gap_above, solve_mode
        p = Params(1.0, 1.1, -1.0)
        rec = solve_mode(p, 0, gap_above(p, 0), ScalarCondition.PAPER)
        assert float(row["E"]) == rec.E

    def test_below_gap(self, capsys):
        code, out, _ = run_cli(capsys, ["solve", "--alpha", "-3",
                                        "--condition", "bs",
                                        "--gap", "below"])
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["E"]) < 1.0


class TestCluster:
    def test_positive_shifts(self, capsys):
        code, out, _ = run_cli(capsys, ["cluster", "--alpha", "-1", "--n", "0",
                                        "--m-cap", "30"])
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) >= 10
        assert all(float(r["shift"]) > 0.0 for r in rows)
        assert all(r["n_gap"] == "0" for r in rows)


class TestMu:
    def test_values(self, capsys):
        code, out, _ = run_cli(capsys, ["mu", "--B", "1", "--a", "1",
                                        "--m", "0", "--E", "0"])
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["mu"]) == pytest.approx(0.78284352192276437,
                                                 rel=1e-12)


class TestExitCodes:
    def test_unknown_flag(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["levels", "--bogus", "1"])
        assert exc.value.code == 2
        capsys.readouterr()

    def test_bad_value(self, capsys):
        code, _, err = run_cli(capsys, ["levels", "--B", "-2"])
        assert code == 2
        assert "error:" in err

    def test_alpha_zero_solve(self, capsys):
        code, _, err = run_cli(capsys, ["solve", "--alpha", "0"])
        assert code == 2
        assert "error:" in err


class TestConfigFile:
    def test_file_then_flag_override(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("B = 2.0\nalpha = -1.5\n")
        code, out, _ = run_cli(capsys, ["levels", "--config", str(cfg),
                                        "--n-max", "0"])
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["E"]) == 2.0
        # a flag wins over the file
        code, out, _ = run_cli(capsys, ["levels", "--config", str(cfg),
                                        "--B", "4", "--n-max", "0"])
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["E"]) == 4.0

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("wibble = 3\n")
        code, _, err = run_cli(capsys, ["levels", "--config", str(cfg)])
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, ["levels", "--config", "/no/such/file"])
        assert code == 2


class TestOutFile:
    def test_writes_file(self, capsys, tmp_path):
        out_path = tmp_path / "levels.csv"
        code, out, _ = run_cli(capsys, ["levels", "--out", str(out_path)])
        assert code == 0
        assert out == ""
        rows = list(csv.DictReader(out_path.open()))
        assert float(rows[0]["E"]) == 1.0


class TestFigure:
    def test_resonance_artifacts(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, ["figure", "resonance", "--B", "1",
                                      "--a", "3", "--out", str(tmp_path)])
        assert code == 0
        assert (tmp_path / "resonance.svg").exists()
        peaks = {r["m"]: float(r["peak_radius"])
                 for r in csv.DictReader((tmp_path / "resonance-peaks.csv").open())}
        assert peaks["3"] == pytest.approx(math.sqrt(7.0), abs=1e-6)
        assert peaks["4"] == pytest.approx(3.0, abs=1e-6)
