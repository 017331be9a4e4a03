"""Command line surface: argument handling, formats, round-trips."""

import csv
import json

import numpy as np
import pytest

from g2orbits.cli import main
from g2orbits.classify import principal_interval
from g2orbits.orbits import action_spec, spectrum_report


class TestVerifyAlgebra:
    def test_exit_zero_and_pass_lines(self, capsys):
        assert main(["verify-algebra"]) == 0
        out = capsys.readouterr().out
        assert out.count("[PASS]") == 6
        assert "[FAIL]" not in out

    def test_json_format(self, capsys):
        assert main(["verify-algebra", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["meta"]["command"] == "verify-algebra"
        assert all(row["passed"] for row in doc["rows"])


class TestOrbit:
    def test_t_and_s_agree(self, capsys):
        assert main(["orbit", "--type", "II", "--s", "0.2", "--format", "json"]) == 0
        by_s = json.loads(capsys.readouterr().out)["rows"][0]
        assert main(["orbit", "--type", "II", "--t", "0.4", "--format", "json"]) == 0
        by_t = json.loads(capsys.readouterr().out)["rows"][0]
        assert by_s == by_t

    def test_exactly_one_parameter_required(self):
        with pytest.raises(SystemExit):
            main(["orbit", "--type", "II"])
        with pytest.raises(SystemExit):
            main(["orbit", "--type", "II", "--t", "0.4", "--s", "0.2"])

    def test_text_report(self, capsys):
        assert main(["orbit", "--type", "III", "--t", "1.0"]) == 0
        out = capsys.readouterr().out
        assert "orbit dimension  20" in out
        assert "principal curvatures" in out

    def test_singular_parameter_is_an_error(self, capsys):
        assert main(["orbit", "--type", "II", "--t", "0.0"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_unknown_type_rejected(self):
        with pytest.raises(SystemExit):
            main(["orbit", "--type", "VII", "--t", "0.4"])


class TestScan:
    def test_csv_round_trip(self, tmp_path):
        path = tmp_path / "scan.csv"
        assert main(
            ["scan", "--type", "V", "--samples", "7", "--format", "csv",
             "--output", str(path)]
        ) == 0
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 7

        spec = action_spec("V")
        lo, hi = principal_interval(spec)
        for row, t in zip(rows, np.linspace(lo, hi, 7)):
            report = spectrum_report(spec, float(t))
            assert float(row["t"]) == report.t
            assert float(row["s"]) == report.s
            assert int(row["dim"]) == report.orbit_dim
            assert float(row["mean_curvature"]) == report.mean_curvature
            assert float(row["norm_sq"]) == report.norm_sq
            expanded = [v for v, m in report.curvatures for _ in range(m)]
            parsed = [float(row[f"pc{i + 1:02d}"]) for i in range(20)]
            assert parsed == expanded

    def test_json_rows(self, capsys):
        assert main(
            ["scan", "--type", "II", "--samples", "4", "--format", "json"]
        ) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["meta"]["samples"] == 4
        assert len(doc["rows"]) == 4
        assert all(row["dim"] == 13 for row in doc["rows"])


class TestClassify:
    def test_type_iii_text(self, capsys):
        assert main(["classify", "--type", "III"]) == 0
        out = capsys.readouterr().out
        # minimal orbit at s = pi/3, biharmonic at s = (2/3) arccot(4/3);
        # compare on a 12-character prefix (roots are located to ~1e-12)
        assert format(np.pi / 3, ".17g")[:12] in out
        assert format((2 / 3) * np.arctan(3 / 4), ".17g")[:12] in out
        assert "status: ok" in out

    def test_json_provenance_labels(self, capsys):
        assert main(["classify", "--type", "IV", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        row = doc["rows"][0]
        assert row["closed_form"] == "type IV principal-curvature closed forms"
        assert row["passed"] is True
        assert row["singular_dims"] == [17, 17]

    def test_type_v_note_emitted(self, capsys):
        assert main(["classify", "--type", "V", "--format", "json"]) == 0
        row = json.loads(capsys.readouterr().out)["rows"][0]
        assert any("sqrt(211)" in note for note in row["notes"])


class TestTables:
    def test_all_types_pass(self, capsys):
        assert main(["tables"]) == 0
        out = capsys.readouterr().out
        assert out.count("ok") >= 12
        assert "FAILED" not in out

    def test_csv(self, capsys):
        assert main(["tables", "--type", "II", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("action_type,")
        assert len(lines) == 4
