"""End-to-end tests of the command-line entry point."""

import json
import math
import runpy
import sys

import numpy as np
import pandas as pd
import pytest

from phasentropy.cli import main
from phasentropy.cli.figures import fig4_q_grid
from phasentropy.entropies import subentropy


def _write_json(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def bell_input(tmp_path):
    s = 1.0 / math.sqrt(2.0)
    return _write_json(tmp_path / "bell.json", {"bipartite": {"re": [[s, 0.0], [0.0, s]]}})


@pytest.fixture
def flat_input(tmp_path):
    return _write_json(tmp_path / "flat.json", {"spectrum": [0.5, 0.5]})


# ------------------------------------------------------------------
# compute / scan
# ------------------------------------------------------------------


class TestCompute:
    def test_json_report(self, tmp_path, flat_input):
        out = tmp_path / "report.json"
        code = main(["--command", "compute", "--input", flat_input, "--output", str(out)])
        assert code == 0
        report = json.loads(out.read_text())
        assert report["n"] == 2
        assert report["source"] == "spectrum"
        assert report["subentropy"] == pytest.approx(math.log(2.0) - 0.5, abs=1e-12)
        assert [row["q"] for row in report["scan"]] == [0.5, 1.0, 2.0, 5.0]
        assert all(report["diagnostics"].values())

    def test_bipartite_matches_spectrum(self, tmp_path, bell_input, flat_input):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["--command", "compute", "--input", bell_input, "--output", str(a)]) == 0
        assert main(["--command", "compute", "--input", flat_input, "--output", str(b)]) == 0
        ra, rb = json.loads(a.read_text()), json.loads(b.read_text())
        assert ra["source"] == "bipartite"
        for key in ("von_neumann", "subentropy", "wehrl_mono", "wehrl_bi", "excess"):
            assert ra[key] == pytest.approx(rb[key], abs=1e-12)
        for row_a, row_b in zip(ra["scan"], rb["scan"]):
            for key, value in row_b.items():
                assert row_a[key] == pytest.approx(value, abs=1e-12)

    def test_csv_and_q_flags(self, tmp_path, flat_input):
        out = tmp_path / "report.csv"
        code = main([
            "--command", "compute", "--input", flat_input, "--output", str(out),
            "--format", "csv", "--q", "3", "--q", "0.25",
        ])
        assert code == 0
        df = pd.read_csv(out)
        assert list(df["q"]) == [3.0, 0.25]
        assert df["renyi"].tolist() == pytest.approx([math.log(2.0)] * 2, abs=1e-12)

    def test_stdout(self, capsys, flat_input):
        assert main(["--command", "compute", "--input", flat_input]) == 0
        captured = capsys.readouterr()
        assert json.loads(captured.out)["n"] == 2
        assert "Computing" in captured.err


class TestScan:
    def test_conjecture_table(self, tmp_path, flat_input):
        out = tmp_path / "scan.json"
        code = main([
            "--command", "scan", "--input", flat_input, "--output", str(out), "--dims", "2",
        ])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["report"]["n"] == 2
        (conj,) = payload["conjecture"]
        assert conj["n"] == 2
        assert conj["n_spectra"] == 1000

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        argv = ["--command", "scan", "--dims", "3", "--format", "csv", "--seed", "5"]
        assert main(argv + ["--output", str(a)]) == 0
        assert main(argv + ["--output", str(b)]) == 0
        assert a.read_text() == b.read_text()


# ------------------------------------------------------------------
# oracle / schur
# ------------------------------------------------------------------


class TestOracle:
    def test_passes(self, tmp_path, flat_input):
        out = tmp_path / "oracle.json"
        code = main([
            "--command", "oracle", "--input", flat_input, "--output", str(out),
            "--samples", "20000", "--q", "2",
        ])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["passed"]
        checks = [row["check"] for row in payload["rows"]]
        assert checks == ["moment_mono", "moment_bi", "mu_simplex", "wehrl_mono", "wehrl_bi"]
        bi = payload["rows"][1]
        assert bi["closed_form"] == pytest.approx(1.0 / 3.0, abs=1e-12)

    def test_random_state(self, tmp_path):
        out = tmp_path / "oracle.json"
        code = main([
            "--command", "oracle", "--output", str(out), "--samples", "20000", "--dims", "3",
        ])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["n"] == 3
        assert payload["source"] == "random"

    def test_failure_exit_code(self, monkeypatch, tmp_path, flat_input):
        monkeypatch.setattr("phasentropy.cli.commands.SIGMA_GATE", 0.0)
        code = main([
            "--command", "oracle", "--input", flat_input, "--output",
            str(tmp_path / "o.json"), "--samples", "2000",
        ])
        assert code == 4

    def test_sample_budget(self, flat_input):
        assert main(["--command", "oracle", "--input", flat_input, "--samples", "10"]) == 2


class TestSchur:
    def test_suites_pass(self, tmp_path):
        out = tmp_path / "schur.json"
        code = main([
            "--command", "schur", "--output", str(out), "--dims", "2", "--dims", "3",
            "--pairs", "20", "--q", "2",
        ])
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["violations"] == 0
        names = {r["monotone_name"] for r in payload["reports"]}
        assert {"subentropy", "renyi_subentropy[q=2]", "mu[q=2]"} <= names
        assert all(r["pairs_tested"] == 40 for r in payload["reports"])

    def test_single_pair(self, tmp_path):
        pair = _write_json(tmp_path / "pair.json", {"upper": [0.7, 0.3], "lower": [0.6, 0.4]})
        out = tmp_path / "schur.csv"
        code = main(["--command", "schur", "--input", pair, "--output", str(out), "--format", "csv"])
        assert code == 0
        df = pd.read_csv(out)
        assert (df["pairs_tested"] == 1).all()
        assert (df["violations"] == 0).all()

    def test_violation_exit_code(self, monkeypatch, tmp_path):
        monkeypatch.setattr(
            "phasentropy.cli.commands.standard_monotones",
            lambda q_values: {"subentropy_convex": (subentropy, "convex")},
        )
        code = main([
            "--command", "schur", "--output", str(tmp_path / "s.json"),
            "--dims", "3", "--pairs", "10",
        ])
        assert code == 6

    def test_unordered_pair(self, tmp_path):
        pair = _write_json(tmp_path / "pair.json", {"upper": [0.6, 0.4], "lower": [0.7, 0.3]})
        assert main(["--command", "schur", "--input", pair]) == 3


# ------------------------------------------------------------------
# figures
# ------------------------------------------------------------------


class TestFigures:
    @pytest.fixture(scope="class")
    def figdir(self, tmp_path_factory):
        outdir = tmp_path_factory.mktemp("figs")
        assert main(["--command", "figures", "--output", str(outdir)]) == 0
        return outdir

    def test_files(self, figdir):
        for name in ("fig1.csv", "fig2.csv", "fig3.csv", "fig4.csv"):
            assert (figdir / name).exists()

    def test_fig1_midpoint(self, figdir):
        df = pd.read_csv(figdir / "fig1.csv")
        row = df[df["x"] == 0.5].iloc[0]
        # mu_10(1/2, 1/2) = 11 / 2^10
        assert row["renyi_sub[q=10]"] == pytest.approx(math.log(1024 / 11) / 9, abs=1e-12)
        for q in ("0.5", "1", "2", "10"):
            assert row[f"renyi[q={q}]"] == pytest.approx(math.log(2.0), abs=1e-12)

    def test_fig1_midpoint_increasing_in_q(self, figdir):
        df = pd.read_csv(figdir / "fig1.csv")
        row = df[df["x"] == 0.5].iloc[0]
        values = [row[f"renyi_sub[q={q}]"] for q in ("0.5", "1", "2", "10")]
        assert np.all(np.diff(values) > 0.0)

    def test_fig1_endpoints_vanish(self, figdir):
        df = pd.read_csv(figdir / "fig1.csv")
        ends = df[df["x"].isin([0.0, 1.0])]
        assert (ends.drop(columns="x").abs() < 1e-12).all().all()

    def test_fig2_fig3_columns(self, figdir):
        df2 = pd.read_csv(figdir / "fig2.csv")
        df3 = pd.read_csv(figdir / "fig3.csv")
        assert list(df2.columns[:3]) == ["lambda1", "lambda2", "lambda3"]
        assert "renyi_sub[q=5]" in df2.columns
        assert "tsallis_moment[q=0.5]" in df3.columns
        assert len(df2) == len(df3)

    def test_fig4_grid(self, figdir):
        df = pd.read_csv(figdir / "fig4.csv")
        assert list(df.columns) == ["kappa", "q", "renyi", "renyi_sub"]
        assert len(df) == 2 * len(fig4_q_grid())
        # Q_q stays below S_q on the power-law spectra
        assert (df["renyi_sub"] <= df["renyi"] + 1e-12).all()

    def test_fig4_renyi_nonincreasing(self, figdir):
        df = pd.read_csv(figdir / "fig4.csv").sort_values(["kappa", "q"])
        for _, group in df.groupby("kappa"):
            assert (np.diff(group["renyi"].to_numpy()) <= 1e-12).all()


# ------------------------------------------------------------------
# Errors and exit codes
# ------------------------------------------------------------------


class TestExitCodes:
    def test_missing_command(self, capsys):
        assert main([]) == 2
        assert "--command is required" in capsys.readouterr().err

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["--command", "plot"])
        assert exc.value.code == 2

    def test_invalid_q(self, capsys, flat_input):
        assert main(["--command", "compute", "--input", flat_input, "--q", "0"]) == 2
        assert "q_grid" in capsys.readouterr().err

    def test_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["--command", "compute", "--input", str(path)]) == 2

    def test_schema_violation(self, tmp_path):
        path = _write_json(tmp_path / "s.json", {"spectrum": [0.5, 0.5], "density": {"re": [[1.0]]}})
        assert main(["--command", "compute", "--input", path]) == 2

    def test_invalid_state(self, tmp_path):
        path = _write_json(tmp_path / "s.json", {"density": {"re": [[0.5, 0.1], [0.0, 0.5]]}})
        assert main(["--command", "compute", "--input", path]) == 3

    def test_negative_spectrum(self, tmp_path):
        path = _write_json(tmp_path / "s.json", {"spectrum": [1.5, -0.5]})
        assert main(["--command", "compute", "--input", path]) == 3

    def test_missing_input(self):
        assert main(["--command", "compute"]) == 3

    def test_missing_file(self, tmp_path, capsys):
        missing = str(tmp_path / "nope.json")
        assert main(["--command", "compute", "--input", missing]) == 5
        assert f"input {missing} does not exist" in capsys.readouterr().err

    def test_missing_pair_file(self, tmp_path):
        missing = str(tmp_path / "pair.json")
        assert main(["--command", "schur", "--input", missing]) == 5

    def test_show_versions(self, capsys):
        assert main(["--show-versions"]) == 0
        assert "INSTALLED VERSIONS" in capsys.readouterr().out

    def test_module_entry_point(self, monkeypatch):
        monkeypatch.setattr(sys, "argv", ["phasentropy", "--show-versions"])
        with pytest.raises(SystemExit) as exc:
            runpy.run_module("phasentropy", run_name="__main__")
        assert exc.value.code == 0
