from fractions import Fraction

import pytest

from mimo_trt.entities.errors import InvalidArgumentError
from mimo_trt.entities.scheme import (
    ALAMOUTI,
    ArqLongTermStatic,
    MimoLowerBound,
    MimoOptimal,
    Orthogonal,
    VblastMl,
    build_scheme,
    check_scheme_for_spec,
    parse_scheme_tag,
)


@pytest.mark.parametrize(
    "scheme, tag",
    [
        (MimoOptimal(), "mimo"),
        (MimoLowerBound(), "mimo-lb"),
        (VblastMl(), "vblast"),
        (Orthogonal(block_length=4, symbols_per_block=3), "orth-l4-k3"),
        (ArqLongTermStatic(max_rounds=2), "arq-L2"),
    ],
)
def test_parse_scheme_tag_should_rebuild_scheme_when_given_its_tag(scheme, tag):
    # Act
    parsed = parse_scheme_tag(tag)

    # Assert
    assert scheme.tag == tag
    assert parsed == scheme


@pytest.mark.parametrize("tag", ["orth", "arq", "blast", "orth-l2"])
def test_parse_scheme_tag_should_raise_when_tag_is_unknown_or_incomplete(tag):
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        parse_scheme_tag(tag)


def test_orthogonal_should_raise_when_more_symbols_than_block_uses():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        Orthogonal(block_length=2, symbols_per_block=3)


def test_alamouti_should_have_unit_code_rate():
    # Assert
    assert ALAMOUTI.code_rate == Fraction(1)


def test_arq_should_raise_when_round_limit_is_zero():
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        ArqLongTermStatic(max_rounds=0)


def test_build_scheme_should_use_only_parameters_of_the_kind():
    # Act
    scheme = build_scheme("orth", block_length=4, symbols_per_block=3, max_rounds=9)

    # Assert
    assert scheme == Orthogonal(block_length=4, symbols_per_block=3)


@pytest.mark.parametrize("m, n", [(2, 3), (9, 9)])
def test_check_scheme_for_spec_should_reject_vblast_when_not_square_or_too_large(m, n):
    # Act / Assert
    with pytest.raises(InvalidArgumentError):
        check_scheme_for_spec(VblastMl(), m, n)
