import json

import pytest

from groverlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def comment_value(out: str, key: str) -> str:
    for line in out.splitlines():
        if line.startswith("#") and f"{key}=" in line:
            fields = dict(
                part.split("=", 1) for part in line.lstrip("# ").split() if "=" in part
            )
            if key in fields:
                return fields[key]
    raise KeyError(key)


class TestGroverCommand:
    def test_optimal_two_qubits(self, capsys):
        code, out, _ = run_cli(capsys, "grover", "--n", "2", "--w", "3", "--k", "optimal")
        assert code == 0
        assert comment_value(out, "k") == "1"
        assert float(comment_value(out, "p_final")) == pytest.approx(1.0, abs=1e-12)
        assert out.strip().splitlines()[-1].startswith("1,")

    def test_paper_count_reports_both(self, capsys):
        code, out, _ = run_cli(capsys, "grover", "--n", "4", "--w", "5", "--k", "paper")
        assert code == 0
        assert comment_value(out, "k") == "4"
        assert comment_value(out, "k_optimal") == "3"
        assert comment_value(out, "k_paper") == "4"
        assert float(comment_value(out, "p_optimal")) == pytest.approx(0.9613, abs=5e-4)
        assert float(comment_value(out, "p_paper")) == pytest.approx(0.5817, abs=5e-4)

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "grover", "--n", "3", "--k", "2", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["k"] == 2
        assert len(payload["trajectory"]) == 3

    def test_usage_error_on_bad_n(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["grover", "--n", "0"])
        assert excinfo.value.code == 2

    def test_usage_error_on_bad_k(self, capsys):
        with pytest.raises(SystemExit):
            main(["grover", "--n", "2", "--k", "soon"])


class TestEvolveCommand:
    def test_fg_arrival(self, capsys):
        code, out, _ = run_cli(
            capsys, "evolve", "--n", "2", "--hamiltonian", "fg", "--t", "arrival"
        )
        assert code == 0
        row = out.strip().splitlines()[-1].split(",")
        assert float(row[1]) == pytest.approx(1.0, abs=1e-10)  # fidelity

    def test_commutator_t0_matches_iterate_plus_projector(self, capsys):
        code, out, _ = run_cli(
            capsys, "evolve", "--n", "2", "--hamiltonian", "commutator", "--t", "t0"
        )
        assert code == 0
        assert float(comment_value(out, "grover_power_distance")) < 1e-9

    def test_augmented_t0_matches_iterate(self, capsys):
        code, out, _ = run_cli(
            capsys, "evolve", "--n", "2", "--hamiltonian", "augmented", "--t", "t0"
        )
        assert code == 0
        assert float(comment_value(out, "grover_power_distance")) < 1e-9

    def test_json_fields(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "evolve", "--n", "3", "--hamiltonian", "commutator", "--t", "2.5",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["grover_power"] is None
        assert payload["out_of_plane"] < 1e-10
        norm_sq = (
            payload["c_sigma"][0] ** 2 + payload["c_sigma"][1] ** 2
            + payload["c_w"][0] ** 2 + payload["c_w"][1] ** 2
            + 2 * payload["x"] * (
                payload["c_sigma"][0] * payload["c_w"][0]
                + payload["c_sigma"][1] * payload["c_w"][1]
            )
        )
        assert norm_sq == pytest.approx(1.0, abs=1e-10)

    def test_rejects_unknown_hamiltonian(self):
        with pytest.raises(SystemExit):
            main(["evolve", "--n", "2", "--hamiltonian", "mystery"])

    def test_rejects_bad_time(self):
        with pytest.raises(SystemExit):
            main(["evolve", "--n", "2", "--hamiltonian", "fg", "--t", "later"])


class TestNaiveCommand:
    def test_small_instance_peak(self, capsys):
        code, out, _ = run_cli(capsys, "naive", "--n", "2", "--w", "1", "--eps", "0.01")
        assert code == 0
        assert float(comment_value(out, "peak_amplitude")) >= 0.999
        assert abs(int(comment_value(out, "peak_step")) - 60) <= 2

    def test_larger_register_peaks_sooner(self, capsys):
        # per-step rotation scales like eps * sqrt(N) sin(theta), so the
        # bigger register tops out in fewer steps
        _, out2, _ = run_cli(capsys, "naive", "--n", "2", "--w", "1", "--eps", "0.01")
        _, out4, _ = run_cli(capsys, "naive", "--n", "4", "--w", "0", "--eps", "0.01")
        assert int(comment_value(out4, "peak_step")) < int(comment_value(out2, "peak_step"))

    def test_usage_error_on_zero_eps(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["naive", "--n", "2", "--eps", "0"])
        assert excinfo.value.code == 2


class TestVerifyCommand:
    def test_passing_sweep_csv(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "--checks", "theorem_main,fg_arrival", "--n", "2..4"
        )
        assert code == 0
        assert err == ""
        lines = out.strip().splitlines()
        assert lines[0].startswith("check_name,")
        assert len(lines) == 13  # header + two rows per check per n

    def test_theorem_json_row_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--checks", "theorem_main", "--n", "2..4", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert len(payload["rows"]) == 6
        assert all(row["passed"] for row in payload["rows"])

    def test_failing_sweep_lists_rows_and_exits_nonzero(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--checks", "norm_gap", "--n", "4..6")
        assert code == 1
        assert "failing check row" in err
        assert "norm_gap" in err

    def test_unknown_check_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--checks", "bogus"])
        assert excinfo.value.code == 2
        err = capsys.readouterr().err
        for name in ("theorem_main", "norm_gap", "corollary", "fg_arrival"):
            assert name in err

    def test_reversed_range_is_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "--n", "8..2"])
        assert excinfo.value.code == 2

    def test_output_file_and_determinism(self, capsys, tmp_path):
        target_a = tmp_path / "a.csv"
        target_b = tmp_path / "b.csv"
        for target in (target_a, target_b):
            code = main(
                ["verify", "--checks", "corollary", "--n", "2..5", "--out", str(target)]
            )
            assert code == 0
        assert target_a.read_bytes() == target_b.read_bytes()
