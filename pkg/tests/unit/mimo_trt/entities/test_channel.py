import numpy as np
import pytest

from mimo_trt.entities.channel import ChannelSpec, ComplexMatrix, RngStream
from mimo_trt.entities.errors import InvalidArgumentError


def test_from_entries_should_lay_out_entries_row_major_when_called():
    # Arrange
    entries = [1, 2j, 3, 4 - 1j, 5, 6]

    # Act
    matrix = ComplexMatrix.from_entries(2, 3, entries)

    # Assert
    assert (matrix.rows, matrix.cols) == (2, 3)
    assert matrix.data[0, 1] == 2j
    assert matrix.data[1, 0] == 4 - 1j
    np.testing.assert_array_equal(matrix.data.ravel(), np.asarray(entries, dtype=complex))


def test_from_entries_should_raise_when_entry_count_does_not_match_shape():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        ComplexMatrix.from_entries(2, 2, [1, 2, 3])


@pytest.mark.parametrize("shape", [(0, 2), (2, 17), (17, 1)])
def test_complex_matrix_should_raise_when_dimension_out_of_range(shape):
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        ComplexMatrix(np.ones(shape))


def test_complex_matrix_should_be_read_only_when_constructed_from_array():
    # Arrange
    source = np.eye(2)
    matrix = ComplexMatrix(source)

    # Act
    source[0, 0] = 5.0

    # Assert
    assert matrix.data[0, 0] == 1.0
    with pytest.raises(ValueError):
        matrix.data[0, 0] = 2.0


def test_rng_stream_should_repeat_sequence_when_seed_and_index_match():
    # Arrange
    first = RngStream(seed=1, stream_index=3)
    second = RngStream(seed=1, stream_index=3)

    # Act
    a = first.generator(block_index=7).standard_normal(5)
    b = second.generator(block_index=7).standard_normal(5)

    # Assert
    assert np.array_equal(a, b)


def test_rng_stream_should_differ_when_block_index_differs():
    # Arrange
    stream = RngStream(seed=1, stream_index=3)

    # Act
    a = stream.generator(block_index=0).standard_normal(5)
    b = stream.generator(block_index=1).standard_normal(5)

    # Assert
    assert not np.array_equal(a, b)


def test_rng_stream_should_raise_when_seed_is_negative():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        RngStream(seed=-1)


def test_check_matrix_should_raise_when_channel_is_not_n_by_m():
    # Arrange
    spec = ChannelSpec(m=3, n=2)

    # Act / Assert
    spec.check_matrix(ComplexMatrix.zeros(2, 3))
    with pytest.raises(InvalidArgumentError):
        spec.check_matrix(ComplexMatrix.zeros(3, 2))
