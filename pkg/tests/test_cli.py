"""
End-to-end tests for the command-line interface.

Each test runs `main` with an argv list and inspects the exit status and the
report it wrote.  Reports go to tmp_path so nothing leaks into the repo.
"""

import csv
import json
from pathlib import Path

import pytest

from hopswitch.cli import config_from_args, create_parser, main

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def data_file(name: str) -> str:
    return str(DATA_DIR / name)


def read_report(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


class TestParser:
    def test_unset_flags_keep_model_defaults(self):
        cfg = config_from_args(create_parser().parse_args(["switch-equiv"]))
        assert cfg.coin == "X"
        assert cfg.expect_equivalent is False

    def test_dtqw_defaults_to_hadamard_coin(self):
        cfg = config_from_args(create_parser().parse_args(["dtqw", "--steps", "5"]))
        assert cfg.coin == "H"
        assert cfg.steps == 5

    def test_renamed_flags(self):
        cfg = config_from_args(create_parser().parse_args(["sweep", "--kraus", "3", "--out", "r.json"]))
        assert cfg.kraus_count == 3
        assert cfg.output_path == "r.json"

    def test_dtqw_coin_default_does_not_leak_into_other_subcommands(self):
        parser = create_parser()
        assert config_from_args(parser.parse_args(["dtqw"])).coin == "H"
        assert config_from_args(parser.parse_args(["switch-equiv"])).coin == "X"
        assert config_from_args(parser.parse_args(["sweep"])).coin == "X"
        assert config_from_args(parser.parse_args(["walk-hybrid"])).coin == "X"
        assert config_from_args(parser.parse_args(["dtqw", "--coin", "X"])).coin == "X"

    def test_quick_start_without_coin_flag_is_equivalent(self, tmp_path):
        status = main([
            "switch-equiv",
            "--channel-e", data_file("unitary_x.json"),
            "--channel-d", data_file("unitary_z.json"),
            "--expect-equivalent",
            "--out", str(tmp_path / "equiv.json"),
        ])
        assert status == 0
        assert read_report(tmp_path / "equiv.json")["config"]["coin"] == "X"

    def test_unknown_subcommand_exits_with_status_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["teleport"])
        assert exc.value.code == 2

    def test_bad_choice_exits_with_status_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "--family", "gaussian"])
        assert exc.value.code == 2


class TestSwitchEquivCommand:
    def test_unitaries_pass_expectation(self, tmp_path):
        out = tmp_path / "equiv.json"
        status = main([
            "switch-equiv",
            "--channel-e", data_file("unitary_x.json"),
            "--channel-d", data_file("unitary_z.json"),
            "--expect-equivalent",
            "--out", str(out),
        ])
        assert status == 0
        report = read_report(out)
        assert report["verdict"] == "equivalent"
        assert report["scenario"] == "switch-equiv"
        assert report["config"]["expect_equivalent"] is True

    def test_uniform_eb_xz_fails_expectation(self, tmp_path):
        out = tmp_path / "equiv.json"
        status = main([
            "switch-equiv",
            "--channel-e", data_file("eb_xz_uniform.json"),
            "--channel-d", data_file("eb_xz_uniform.json"),
            "--expect-equivalent",
            "--out", str(out),
        ])
        assert status == 1
        assert read_report(out)["verdict"] == "not-equivalent"

    def test_not_equivalent_without_expectation_succeeds(self, tmp_path):
        status = main([
            "switch-equiv",
            "--channel-e", data_file("eb_xz.json"),
            "--channel-d", data_file("eb_xz.json"),
            "--out", str(tmp_path / "equiv.json"),
        ])
        assert status == 0

    def test_identity_coin_breaks_equivalence(self, tmp_path):
        out = tmp_path / "equiv.json"
        status = main([
            "switch-equiv",
            "--channel-e", data_file("unitary_x.json"),
            "--channel-d", data_file("unitary_z.json"),
            "--coin", "I",
            "--expect-equivalent",
            "--out", str(out),
        ])
        assert status == 1
        assert read_report(out)["results"]["carrier_distance"] == pytest.approx(1.0)


class TestErrorStatuses:
    def test_missing_file(self, tmp_path):
        out = tmp_path / "err.json"
        status = main([
            "switch-equiv",
            "--channel-e", str(tmp_path / "missing.json"),
            "--channel-d", data_file("unitary_z.json"),
            "--out", str(out),
        ])
        assert status == 2
        report = read_report(out)
        assert report["verdict"] == "error"
        assert report["error"]["error"] == "FileNotFoundError"

    def test_malformed_json(self, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json", encoding="utf-8")
        status = main([
            "switch-run",
            "--channel-e", str(broken),
            "--channel-d", data_file("unitary_z.json"),
            "--out", str(tmp_path / "err.json"),
        ])
        assert status == 2

    def test_missing_channel_flag(self, tmp_path):
        status = main(["spatial-run", "--channel-e", data_file("eb_xz.json"), "--out", str(tmp_path / "err.json")])
        assert status == 2

    def test_config_invariant_violation_is_a_validation_error(self, tmp_path):
        status = main(["switch-equiv", "--tolerance", "-1", "--out", str(tmp_path / "err.json")])
        assert status == 3
        assert not (tmp_path / "err.json").exists()

    def test_negative_steps_is_a_validation_error(self, tmp_path):
        assert main(["dtqw", "--steps", "-2", "--out", str(tmp_path / "err.json")]) == 3

    def test_non_cptp_channel(self, tmp_path):
        out = tmp_path / "err.json"
        status = main([
            "switch-equiv",
            "--channel-e", data_file("not_cptp.json"),
            "--channel-d", data_file("eb_xz.json"),
            "--out", str(out),
        ])
        assert status == 3
        assert read_report(out)["error"]["error"] == "CPTPViolationError"

    def test_mismatched_dimensions(self, tmp_path):
        qutrit = tmp_path / "qutrit.json"
        qutrit.write_text(json.dumps({
            "name": "id3",
            "dim": 3,
            "kraus": [[[[1, 0], [0, 0], [0, 0]], [[0, 0], [1, 0], [0, 0]], [[0, 0], [0, 0], [1, 0]]]],
        }), encoding="utf-8")
        status = main([
            "switch-run",
            "--channel-e", str(qutrit),
            "--channel-d", data_file("eb_xz.json"),
            "--out", str(tmp_path / "err.json"),
        ])
        assert status == 3


class TestOtherCommands:
    def test_dtqw_writes_report_and_csv(self, tmp_path):
        out = tmp_path / "walk.json"
        status = main(["dtqw", "--steps", "2", "--out", str(out)])
        assert status == 0
        report = read_report(out)
        assert report["results"]["distribution"]["0"] == pytest.approx(0.5)
        with open(tmp_path / "walk.csv", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["position", "probability"]
        assert {int(x): float(p) for x, p in rows[1:]} == {-2: 0.25, -1: 0.0, 0: 0.5, 1: 0.0, 2: 0.25}

    def test_dtqw_csv_out_path(self, tmp_path):
        status = main(["dtqw", "--steps", "1", "--out", str(tmp_path / "walk.csv")])
        assert status == 0
        assert (tmp_path / "walk.csv").exists()
        assert (tmp_path / "walk.json").exists()

    def test_dtqw_with_coin_file(self, tmp_path):
        out = tmp_path / "walk.json"
        status = main(["dtqw", "--steps", "3", "--coin", data_file("hadamard_coin.json"), "--out", str(out)])
        assert status == 0
        assert read_report(out)["results"]["mean_displacement"] == pytest.approx(0.5)

    def test_eb_demo(self, tmp_path):
        out = tmp_path / "eb.json"
        status = main(["eb-demo", "--trials", "4", "--search-corrections", "--out", str(out)])
        assert status == 0
        assert read_report(out)["verdict"] == "corrected"

    def test_walk_hybrid_with_state_file(self, tmp_path):
        out = tmp_path / "hybrid.json"
        status = main([
            "walk-hybrid",
            "--channel-e", data_file("unitary_x.json"),
            "--channel-d", data_file("unitary_z.json"),
            "--carrier", data_file("plus_state.json"),
            "--expect-equivalent",
            "--out", str(out),
        ])
        assert status == 0
        assert read_report(out)["results"]["equivalent"] is True

    def test_sweep_is_deterministic_for_a_seed(self, tmp_path):
        argv = ["sweep", "--family", "random-channel", "--trials", "3", "--seed", "11"]
        assert main(argv + ["--out", str(tmp_path / "a.json")]) == 0
        assert main(argv + ["--out", str(tmp_path / "b.json")]) == 0
        a, b = read_report(tmp_path / "a.json"), read_report(tmp_path / "b.json")
        assert a["results"] == b["results"]
        assert a["verdict"] == b["verdict"] == "not-equivalent"

    def test_unitary_sweep_meets_expectation(self, tmp_path):
        status = main(["sweep", "--trials", "3", "--dim", "2", "--expect-equivalent", "--out", str(tmp_path / "s.json")])
        assert status == 0
