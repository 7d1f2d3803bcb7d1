import numpy as np
import pytest

from mimo_trt.core.channels import arq_outcome, arq_rounds, mimo_outage
from mimo_trt.core.linalg import sample_channels
from mimo_trt.entities.channel import ChannelSpec, ComplexMatrix, RngStream
from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.estimate import ArqOutcome
from mimo_trt.entities.scheme import ArqLongTermStatic

SPEC_2X2 = ChannelSpec(m=2, n=2)


def test_arq_outcome_should_succeed_in_first_round_when_channel_is_strong():
    # Arrange
    H = ComplexMatrix.identity(2, 10.0)

    # Act
    outcome = arq_outcome(H, SPEC_2X2, ArqLongTermStatic(3), 10.0, 1.0)

    # Assert
    assert outcome == ArqOutcome(rounds_used=1, delivered=True)


@pytest.mark.parametrize("max_rounds", [1, 2, 5])
def test_arq_outcome_should_use_all_rounds_and_fail_when_channel_is_zero(max_rounds):
    # Act
    outcome = arq_outcome(
        ComplexMatrix.zeros(2, 2), SPEC_2X2, ArqLongTermStatic(max_rounds), 100.0, 1.0
    )

    # Assert
    assert outcome == ArqOutcome(rounds_used=max_rounds, delivered=False)


def test_arq_rounds_should_pick_smallest_round_reaching_rate():
    # Arrange
    info = np.array([4.0, 2.0, 1.5, 1.0, 0.5])

    # Act
    rounds, delivered = arq_rounds(info, 4.0, 3)

    # Assert
    np.testing.assert_array_equal(rounds, [1, 2, 3, 3, 3])
    np.testing.assert_array_equal(delivered, [True, True, True, False, False])


def test_arq_outcome_should_match_plain_channel_when_single_round():
    # Arrange
    channels = sample_channels(RngStream(seed=9).generator(0), 2, 2, 200)

    for channel in channels:
        matrix = ComplexMatrix(channel)

        # Act
        outcome = arq_outcome(matrix, SPEC_2X2, ArqLongTermStatic(1), 10.0, 4.0)

        # Assert
        assert outcome.delivered == (not mimo_outage(matrix, SPEC_2X2, 10.0, 4.0))


def test_arq_outcome_should_not_use_more_rounds_when_snr_increases():
    # Arrange
    matrix = ComplexMatrix(sample_channels(RngStream(seed=10).generator(0), 2, 2, 1)[0])
    scheme = ArqLongTermStatic(4)

    # Act
    rounds = [
        arq_outcome(matrix, SPEC_2X2, scheme, rho, 8.0).rounds_used
        for rho in (1.0, 10.0, 100.0, 1000.0, 1e5)
    ]

    # Assert
    assert rounds == sorted(rounds, reverse=True)


def test_arq_outcome_should_raise_when_first_round_rate_is_not_positive():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        arq_outcome(ComplexMatrix.identity(2), SPEC_2X2, ArqLongTermStatic(2), 10.0, 0.0)
