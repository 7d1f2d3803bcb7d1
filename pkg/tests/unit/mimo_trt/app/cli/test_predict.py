import json

import pytest
from click.testing import CliRunner

from mimo_trt.app.cli.predict import predict


def test_predict_should_print_coefficients_and_spacing_as_json():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(
        predict, ["--m", "2", "--n", "2", "--k", "0", "--delta-r", "4", "--format", "json"]
    )

    # Assert
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    (region,) = report["regions"]
    coefficients = region["tradeoff"]["coefficients"]
    assert (coefficients["c"], coefficients["g"]) == (3.0, 4.0)
    assert coefficients["t"] == pytest.approx(4 / 3)
    assert region["spacings"][0]["spacing_db"] == pytest.approx(9.03, abs=0.005)


def test_predict_should_render_table_for_vblast():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(
        predict, ["--scheme", "vblast", "--m", "2", "--n", "2", "--delta-r", "4"]
    )

    # Assert
    assert result.exit_code == 0
    assert "6.02 dB" in result.stdout


def test_predict_should_label_degenerate_point():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(
        predict, ["--m", "2", "--n", "2", "--rate", "25", "--snr-db", "30", "--format", "json"]
    )

    # Assert
    assert result.exit_code == 0
    assert json.loads(result.stdout)["point"]["region"]["label"] == "degenerate"


def test_predict_should_exit_with_usage_error_when_region_index_is_out_of_range():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(predict, ["--m", "2", "--n", "2", "--k", "5"])

    # Assert
    assert result.exit_code == 2
