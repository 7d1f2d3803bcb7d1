import json

from click.testing import CliRunner

from mimo_trt.app.cli.simulate import simulate
from mimo_trt.entities.result import RESULT_COLUMNS

SWEEP_ARGS = [
    "--m",
    "2",
    "--n",
    "2",
    "--rates",
    "4,8",
    "--snr-start-db",
    "10",
    "--snr-stop-db",
    "30",
    "--snr-step-db",
    "2",
    "--max-samples",
    "2000",
    "--target-hits",
    "50",
    "--seed",
    "7",
]


def test_simulate_should_write_identical_files_when_rerun_with_same_seed(tmp_path):
    # Arrange
    runner = CliRunner()
    first = tmp_path / "first.csv"
    second = tmp_path / "second.csv"

    # Act
    first_result = runner.invoke(simulate, [*SWEEP_ARGS, "--out", str(first)])
    second_result = runner.invoke(simulate, [*SWEEP_ARGS, "--threads", "3", "--out", str(second)])

    # Assert
    assert first_result.exit_code == 0
    assert second_result.exit_code == 0
    lines = first.read_text().splitlines()
    assert lines[0] == ",".join(RESULT_COLUMNS)
    assert len(lines) == 23
    assert first.read_bytes() == second.read_bytes()


def test_simulate_should_print_rows_when_no_output_file_is_given():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(simulate, [*SWEEP_ARGS, "--rates", "4", "--format", "json"])

    # Assert
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    assert len(rows) == 11
    assert {row["rate_bpcu"] for row in rows} == {4.0}


def test_simulate_should_let_flags_override_config_file(tmp_path):
    # Arrange
    config = tmp_path / "sweep.json"
    config.write_text(
        json.dumps(
            {
                "rates": [4.0, 8.0],
                "snr_start_db": 10.0,
                "snr_stop_db": 14.0,
                "snr_step_db": 2.0,
                "max_samples": 2000,
                "target_hits": 50,
            }
        )
    )
    runner = CliRunner()

    # Act
    result = runner.invoke(
        simulate, ["--config", str(config), "--rates", "8", "--format", "json"]
    )

    # Assert
    assert result.exit_code == 0
    rows = json.loads(result.stdout)
    assert [(row["rate_bpcu"], row["snr_db"]) for row in rows] == [
        (8.0, 10.0),
        (8.0, 12.0),
        (8.0, 14.0),
    ]


def test_simulate_should_exit_with_usage_error_when_rates_are_empty():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(simulate, [*SWEEP_ARGS, "--rates", ""])

    # Assert
    assert result.exit_code == 2


def test_simulate_should_exit_with_usage_error_when_snr_range_is_missing():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(simulate, ["--rates", "4"])

    # Assert
    assert result.exit_code == 2


def test_simulate_should_fail_when_output_directory_does_not_exist(tmp_path):
    # Arrange
    runner = CliRunner()
    out = tmp_path / "missing" / "rows.csv"

    # Act
    result = runner.invoke(simulate, [*SWEEP_ARGS, "--out", str(out)])

    # Assert
    assert result.exit_code == 1
    assert "I/O error" in result.output
