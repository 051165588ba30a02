import io
import json

import pandas as pd
import pytest

from app import __version__
from app.cli import main
from app.errors import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE
from app.utils.sweep_logger import SWEEP_HEADER_LINE


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def run_json(capsys, *argv):
    status, out = run(capsys, *argv)
    assert status == EXIT_OK
    return json.loads(out)


class TestDist:
    def test_csv(self, capsys):
        status, out = run(capsys, "dist", "--n", "3", "--theta", "1", "--format", "csv")
        assert status == EXIT_OK
        assert out.splitlines()[0] == "x,pmf,cdf,pmf_exact,cdf_exact"
        frame = pd.read_csv(io.StringIO(out))
        assert frame["x"].tolist() == [1, 2, 3]
        assert frame["pmf"].tolist() == pytest.approx([1 / 3, 1 / 2, 1 / 6], abs=1e-15)
        assert frame["pmf_exact"].tolist() == ["1/3", "1/2", "1/6"]
        assert frame["cdf_exact"].tolist() == ["1/3", "5/6", "1/1"]

    def test_json_single_point(self, capsys):
        payload = run_json(capsys, "dist", "--n", "1", "--theta", "2", "--reproducible")
        rows = payload["results"]["rows"]
        assert len(rows) == 1
        assert rows[0]["pmf"] == 1.0
        assert payload["command"] == "dist"
        assert payload["artifact_version"] == __version__
        assert "generated_at" not in payload

    def test_decimal_theta_has_no_exact_columns(self, capsys):
        status, out = run(capsys, "dist", "--n", "4", "--theta", "0.5", "--format", "csv")
        assert status == EXIT_OK
        assert out.splitlines()[0] == "x,pmf,cdf"

    @pytest.mark.parametrize(
        "argv",
        [
            ("dist", "--n", "0", "--theta", "1"),
            ("dist", "--n", "3", "--theta", "0"),
            ("dist", "--n", "3", "--theta", "-2"),
            ("dist", "--n", "3", "--theta", "abc"),
            ("dist", "--n", "3"),
            ("dist", "--n", "3", "--theta", "1", "--format", "xml"),
        ],
    )
    def test_usage_errors(self, capsys, argv):
        status, out = run(capsys, *argv)
        assert status == EXIT_USAGE
        assert out == ""

    def test_reproducible_output_is_byte_identical(self, capsys):
        argv = ("dist", "--n", "12", "--theta", "3/7", "--reproducible")
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second

    def test_params_echo_round_trips(self, capsys):
        first = run_json(capsys, "dist", "--n", "9", "--theta", "3/7", "--reproducible")
        echo = first["params_echo"]
        assert echo == {"n": 9, "theta": "3/7"}
        again = run_json(
            capsys, "dist", "--n", str(echo["n"]), "--theta", echo["theta"], "--reproducible"
        )
        assert again == first

    def test_timestamp_without_reproducible(self, capsys):
        payload = run_json(capsys, "dist", "--n", "2", "--theta", "1")
        assert "generated_at" in payload


class TestMoments:
    def test_summary(self, capsys):
        payload = run_json(capsys, "moments", "--n", "3", "--theta", "1", "--reproducible")
        results = payload["results"]
        assert results["mu0"] == pytest.approx(11 / 6, abs=1e-14)
        assert results["sigma0_sq"] == pytest.approx(17 / 36, abs=1e-14)
        assert results["power_sums"]["s1"] == pytest.approx(11 / 6, abs=1e-15)
        assert all(env["holds"] for env in results["envelopes"].values())
        assert "sigma_ratio" not in results

    def test_single_point_has_no_budget(self, capsys):
        results = run_json(capsys, "moments", "--n", "1", "--theta", "2")["results"]
        assert "approximation_budget" not in results


class TestBounds:
    def test_defaults(self, capsys):
        payload = run_json(capsys, "bounds", "--n", "200", "--theta", "1", "--reproducible")
        results = payload["results"]
        assert results["C"] == 0.5591
        assert results["D"] == 1.0
        assert results["conditions"]["display4"] is True
        assert results["kolmo_X"] <= results["upper"]
        assert payload["params_echo"]["C"] == 0.5591

    def test_kolmogorov_reports(self, capsys):
        results = run_json(capsys, "bounds", "--n", "2", "--theta", "1")["results"]
        reports = results["kolmogorov"]
        assert set(reports) == {"X", "Y", "Z"}
        x = reports["X"]
        assert x["distance"] == results["kolmo_X"]
        assert x["distance"] == pytest.approx(0.3413447460685429, abs=1e-12)
        assert abs(x["argmax_point"]) == pytest.approx(1.0)
        assert x["side"] in ("left-limit", "right-value")

    def test_degenerate_standardization_is_null(self, capsys):
        results = run_json(capsys, "bounds", "--n", "1", "--theta", "2")["results"]
        assert results["kolmogorov"]["X"] is None
        assert results["kolmo_X"] is None

    def test_violated_condition_reports_nulls(self, capsys):
        results = run_json(capsys, "bounds", "--n", "2", "--theta", "1")["results"]
        assert results["upper"] is None
        assert results["gamma1"] is None
        assert "upper" in results["reasons"]
        assert results["hall_barbour"]["delta"] == pytest.approx(1.0)

    def test_overrides(self, capsys):
        results = run_json(
            capsys, "bounds", "--n", "500", "--theta", "2", "--C", "0.4748", "--D", "2"
        )["results"]
        assert results["C"] == 0.4748
        assert results["upper"] == pytest.approx(0.4748 * results["gamma1"], rel=1e-15)

    @pytest.mark.parametrize("D", ["0", "-1", "nan"])
    def test_bad_D(self, capsys, D):
        status, _ = run(capsys, "bounds", "--n", "10", "--theta", "1", "--D", D)
        assert status == EXIT_USAGE


class TestCStar:
    def test_default(self, capsys):
        status, out = run(capsys, "cstar")
        assert status == EXIT_OK
        root_line, residual_line = out.splitlines()
        assert root_line.startswith("2.16258")
        assert len(root_line.split(".")[1]) == 10
        assert float(residual_line.split()[1]) <= 1e-12

    def test_tolerance_flag(self, capsys):
        status, out = run(capsys, "cstar", "--tolerance", "1e-10")
        assert status == EXIT_OK
        assert float(out.splitlines()[1].split()[1]) <= 1e-10

    def test_tolerance_below_floor(self, capsys):
        status, _ = run(capsys, "cstar", "--tolerance", "1e-20")
        assert status == EXIT_USAGE


class TestSweep:
    def test_writes_csv(self, capsys, tmp_path):
        out_path = tmp_path / "case_a.csv"
        payload = run_json(
            capsys,
            "sweep", "--coupling", "power", "--a", "1", "--p", "0.5",
            "--n-values", "16,32,64", "--out", str(out_path), "--reproducible",
        )
        lines = out_path.read_text().splitlines()
        assert lines[0] == SWEEP_HEADER_LINE
        assert len(lines) == 4
        frame = pd.read_csv(out_path)
        assert frame["status"].tolist() == ["ok", "ok", "ok"]
        assert frame["case"].tolist() == ["A", "A", "A"]
        assert payload["results"]["case"] == "A"
        assert payload["results"]["rows"] == 3
        assert payload["params_echo"]["n_values"] == [16, 32, 64]

    def test_log2_grid_and_jobs(self, capsys, tmp_path):
        out_path = tmp_path / "ratio.csv"
        payload = run_json(
            capsys,
            "sweep", "--coupling", "ratio", "--c", "4",
            "--log2-min", "4", "--log2-max", "6", "--points", "3",
            "--jobs", "2", "--out", str(out_path),
        )
        assert payload["params_echo"]["n_values"] == [16, 32, 64]
        assert payload["results"]["case"] == "Bstar"

    def test_failed_rows_keep_exit_zero(self, capsys, tmp_path):
        out_path = tmp_path / "fixed.csv"
        payload = run_json(
            capsys,
            "sweep", "--coupling", "fixed", "--theta0", "5",
            "--n-values", "4,16", "--out", str(out_path),
        )
        assert payload["results"]["failed"] == 1
        frame = pd.read_csv(out_path)
        assert frame["status"][0].startswith("failed:")

    def test_power_too_steep(self, capsys, tmp_path):
        status, _ = run(
            capsys,
            "sweep", "--coupling", "power", "--a", "1", "--p", "2.5",
            "--n-values", "16", "--out", str(tmp_path / "x.csv"),
        )
        assert status == EXIT_DOMAIN

    @pytest.mark.parametrize(
        "extra",
        [
            ("--coupling", "power", "--a", "1", "--p", "0.5", "--n-values", ""),
            ("--coupling", "power", "--a", "1", "--p", "0.5", "--log2-min", "6", "--log2-max", "4"),
            ("--coupling", "power", "--p", "0.5", "--n-values", "16"),
            ("--coupling", "ratio", "--n-values", "16"),
            ("--coupling", "power", "--a", "1", "--p", "0.5", "--n-values", "16", "--jobs", "0"),
        ],
    )
    def test_usage_errors(self, capsys, tmp_path, extra):
        status, _ = run(capsys, "sweep", *extra, "--out", str(tmp_path / "x.csv"))
        assert status == EXIT_USAGE


class TestConfig:
    def test_config_file_sets_constants(self, capsys, tmp_path, restore_settings, monkeypatch):
        monkeypatch.delenv("EWENS_BERRY_BERRY_ESSEEN_C", raising=False)
        config = tmp_path / "ewens.env"
        config.write_text("EWENS_BERRY_BERRY_ESSEEN_C=0.4748\n")
        results = run_json(
            capsys, "bounds", "--n", "100", "--theta", "1", "--config", str(config)
        )["results"]
        assert results["C"] == 0.4748

    def test_flag_beats_config(self, capsys, tmp_path, restore_settings):
        config = tmp_path / "ewens.env"
        config.write_text("EWENS_BERRY_HALL_BARBOUR_D=3.0\n")
        results = run_json(
            capsys, "bounds", "--n", "100", "--theta", "1", "--config", str(config), "--D", "2"
        )["results"]
        assert results["D"] == 2.0

    def test_missing_config(self, capsys, tmp_path):
        status, _ = run(
            capsys, "cstar", "--config", str(tmp_path / "missing.env")
        )
        assert status == EXIT_USAGE
