import json

import pytest

from cli.commands import EXIT_MISMATCH, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, SWEEP_HEADER, cmd_predict, sweep_params
from cli.main import main
from cli.render import parse_json, render_json, render_text
from default.box import get_default_margin
from default.field import PRIME_ENV_VAR, get_default_field_config
from predictor.betti import BettiTable
from predictor.resolutions import predict
from scheme.params import AciParams, BiDegree
from utils.errors import ConfigError
from utils.yaml import load_config

THREE_POINTS = ["--alpha", "1", "1", "--beta", "1", "1", "--m", "2", "4", "3"]


def test_predict_json(capsys, three_points_table):
    assert main(["predict", *THREE_POINTS, "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["normalization"] == {"transposed": False}
    table = BettiTable.from_lists(payload["beta0"], payload["beta1"], payload["beta2"])
    assert table == three_points_table


def test_predict_block_scheme_json(capsys, block_scheme_table):
    args = ["predict", "--alpha", "2", "1", "--beta", "2", "2", "--m", "2", "4", "3", "--format", "json"]
    assert main(args) == EXIT_OK
    table, record = parse_json(capsys.readouterr().out)
    assert table == block_scheme_table
    assert not record.transposed


def test_predict_text(capsys):
    assert main(["predict", *THREE_POINTS]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == (
        "F0 = R(-7,0) ⊕ R(-6,-1)^2 ⊕ R(-5,-2)^3 ⊕ R(-4,-3)^3 ⊕ R(-3,-4)^3 ⊕ R(-2,-5)^2 ⊕ R(-1,-6)^2 ⊕ R(0,-7)"
    )
    assert lines[2] == "F2 = R(-7,-2) ⊕ R(-6,-3)^2 ⊕ R(-5,-4)^2 ⊕ R(-4,-5)^2 ⊕ R(-3,-6) ⊕ R(-2,-7)"


def test_predict_unit_ideal(capsys):
    args = ["predict", "--alpha", "1", "1", "--beta", "1", "1", "--m", "0", "0", "0"]
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["F0 = R", "F1 = 0", "F2 = 0"]


def test_predict_records_transposition():
    payload = json.loads(cmd_predict(AciParams.unit(1, 1, 3), "json"))
    assert payload["normalization"]["transposed"] is True


def test_predict_csv():
    lines = cmd_predict(AciParams.unit(1, 0, 0), "csv").splitlines()
    assert lines == ["module,a,b,count", "beta0,0,1,1", "beta0,1,0,1", "beta1,1,1,1"]


def test_output_is_deterministic():
    params = AciParams(2, 1, 2, 2, 2, 4, 3)
    assert cmd_predict(params, "json") == cmd_predict(params, "json")


def test_json_round_trip(block_scheme):
    table, record = predict(block_scheme)
    text = render_json(table, record)
    assert render_json(*parse_json(text)) == text


def test_render_text_sorts_by_total_degree():
    table = BettiTable.from_lists([(0, 1, 1), (2, 0, 1), (1, 2, 2)])
    assert render_text(table).splitlines()[0] == "F0 = R(-1,-2)^2 ⊕ R(-2,0) ⊕ R(0,-1)"


def test_invalid_params_exit_code(capsys):
    assert main(["predict", "--alpha", "0", "1", "--beta", "1", "1", "--m", "1", "1", "1"]) == EXIT_USAGE


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["predict", "--alpha", "1", "1"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["unknown"])
    assert exc.value.code == EXIT_USAGE


def test_verify_passes(capsys):
    assert main(["verify", *THREE_POINTS]) == EXIT_OK
    assert capsys.readouterr().out.startswith("verify (1, 1, 1, 1, 2, 4, 3) box (9,9): pass")


def test_verify_corrupted_prediction(capsys):
    assert main(["verify", *THREE_POINTS, "--corrupt"]) == EXIT_MISMATCH
    assert "beta0 (7,7): predicted 1, oracle 0" in capsys.readouterr().out


def test_verify_box_failure_has_its_own_exit_code():
    assert main(["verify", *THREE_POINTS, "--margin", "0", "0"]) == EXIT_RESOURCE


def test_verify_json(capsys):
    assert main(["verify", *THREE_POINTS, "--format", "json", "--prime", "101", "--seed", "2"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["passed"] is True
    assert payload["diff"] == {"beta0": [], "beta1": [], "beta2": []}
    assert payload["hilbert_mismatches"] == []
    assert payload["family_mismatches"] == []


def test_verify_requires_params_without_sweep():
    assert main(["verify"]) == EXIT_USAGE


def test_verify_sweep_csv(capsys):
    assert main(["verify", "--sweep", "--max-alpha", "1", "--max-m", "1", "--format", "csv"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(SWEEP_HEADER)
    assert len(lines) == 1 + len(sweep_params(1, 1))
    assert all(line.split(",")[7] == "pass" for line in lines[1:])


def test_sweep_params_are_one_per_transposition_class():
    instances = sweep_params(1, 1)
    assert len(instances) == 6
    assert all(p.blocks == (1, 1, 1, 1) for p in instances)


def test_powers(capsys):
    args = ["powers", "--alpha", "1", "1", "--beta", "1", "1", "--m", "1", "1", "1", "--power", "2"]
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out.startswith("powers (1, 1, 1, 1, 1, 1, 1) m=2: equal")


def test_powers_first_power():
    assert main(["powers", *THREE_POINTS, "--power", "1"]) == EXIT_OK


def test_powers_rejects_zero_power():
    assert main(["powers", *THREE_POINTS, "--power", "0"]) == EXIT_USAGE


def test_small_prime_is_a_usage_error():
    assert main(["verify", *THREE_POINTS, "--prime", "3"]) == EXIT_USAGE


def test_config_file_and_environment(tmp_path, monkeypatch):
    path = tmp_path / "config.yaml"
    path.write_text(
        "field:\n  prime: 101\n  seed: 4\n"
        "verification:\n  margin: [3, 1]\n  sweep_max_alpha: 1\n  sweep_max_m: 1\n"
        "powers:\n  margin: [1, 1]\n"
        "logging:\n  level: WARNING\n"
    )
    config = load_config(str(path))
    assert get_default_field_config(config).p == 101
    assert get_default_margin(config) == BiDegree(3, 1)
    assert get_default_margin(config, "powers") == BiDegree(1, 1)
    monkeypatch.setenv(PRIME_ENV_VAR, "32003")
    assert get_default_field_config(config).p == 32003
    assert main(["predict", *THREE_POINTS, "--config", str(path)]) == EXIT_OK


def test_load_config_rejects_non_mapping(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_load_config_reports_unreadable_files(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.yaml"))
    broken = tmp_path / "broken.yaml"
    broken.write_text("field: [1, 2\n")
    with pytest.raises(ConfigError):
        load_config(str(broken))


def test_bad_config_is_a_usage_error(tmp_path):
    assert main(["predict", *THREE_POINTS, "--config", str(tmp_path / "missing.yaml")]) == EXIT_USAGE
    partial = tmp_path / "partial.yaml"
    partial.write_text("logging:\n  level: INFO\n")
    assert main(["predict", *THREE_POINTS, "--config", str(partial)]) == EXIT_USAGE
    broken = tmp_path / "broken.yaml"
    broken.write_text("field: [1, 2\n")
    assert main(["verify", *THREE_POINTS, "--config", str(broken)]) == EXIT_USAGE
