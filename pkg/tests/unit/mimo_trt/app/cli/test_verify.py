import json

from click.testing import CliRunner

from mimo_trt.app.cli.verify import verify


def test_verify_should_exit_cleanly_when_identities_hold():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(verify, ["identities"])

    # Assert
    assert result.exit_code == 0
    assert "64/64 checks passed" in result.stdout


def test_verify_should_print_checks_as_json():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(verify, ["exponent", "--format", "json"])

    # Assert
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["oracle"] == "exponent"
    assert report["passed"] is True


def test_verify_should_reject_unknown_oracle():
    # Arrange
    runner = CliRunner()

    # Act
    result = runner.invoke(verify, ["oracle"])

    # Assert
    assert result.exit_code == 2
