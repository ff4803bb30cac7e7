from contextlib import nullcontext as does_not_raise
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from pydantic import ValidationError
from qfock.coeffield import check_genericity
from qfock.coeffield import format_scalar
from qfock.coeffield import ParameterSet
from qfock.coeffield import parse_scalar
from qfock.coeffield import q_binomial
from qfock.coeffield import q_number
from qfock.exceptions import ZeroParameterError
from qfock.hypothesis_strategies import parameter_set_strategy
from qfock.hypothesis_strategies import scalar_strategy


@pytest.mark.parametrize(
    "text, expected, expectation",
    [
        pytest.param("4/3", Fraction(4, 3), does_not_raise(), id="fraction"),
        pytest.param(" -7 / 2 ", Fraction(-7, 2), does_not_raise(), id="whitespace"),
        pytest.param("6/4", Fraction(3, 2), does_not_raise(), id="reduced"),
        pytest.param("5", Fraction(5), does_not_raise(), id="integer"),
        pytest.param("1/0", None, pytest.raises(ValueError), id="zero denominator"),
        pytest.param("1.5", None, pytest.raises(ValueError), id="decimal"),
        pytest.param("a/b", None, pytest.raises(ValueError), id="letters"),
    ],
)
def test_parse_scalar(text, expected, expectation):
    with expectation:
        assert parse_scalar(text) == expected


def test_parse_scalar_rejects_floats_and_booleans():
    with pytest.raises(TypeError):
        parse_scalar(1.5)  # type: ignore[arg-type]
    with pytest.raises(TypeError):
        parse_scalar(True)


@given(value=scalar_strategy)
def test_format_then_parse_is_identity(value):
    assert parse_scalar(format_scalar(value)) == value


def test_format_scalar_is_canonical():
    assert format_scalar(Fraction(-6, 4)) == "-3/2"
    assert format_scalar(Fraction(2)) == "2/1"


@pytest.mark.parametrize(
    "q, p, generic",
    [
        pytest.param(Fraction(4, 3), Fraction(5, 7), True, id="default"),
        pytest.param(Fraction(-1), Fraction(5, 7), False, id="q root of unity"),
        pytest.param(Fraction(4, 3), Fraction(16, 9), False, id="p = q^2"),
        pytest.param(Fraction(4, 3), Fraction(4, 3), False, id="p^2 = q^2"),
        pytest.param(Fraction(4, 3), Fraction(1), False, id="p = q^0"),
        pytest.param(Fraction(1), Fraction(5, 7), True, id="q = 1"),
    ],
)
def test_check_genericity(q, p, generic):
    result = check_genericity(q, p, 50)
    assert bool(result) is generic
    if not generic:
        assert result.reason


def test_check_genericity_is_monotone_in_the_bound():
    # p = q^40 is only caught once the bound reaches 20
    q = Fraction(4, 3)
    p = q**40
    assert check_genericity(q, p, 10).generic
    assert not check_genericity(q, p, 20).generic


def test_check_genericity_rejects_zero():
    with pytest.raises(ZeroParameterError):
        check_genericity(Fraction(0), Fraction(5, 7), 10)


@pytest.mark.parametrize(
    "kwargs, expectation",
    [
        pytest.param({}, does_not_raise(), id="defaults"),
        pytest.param({"q": "1/1", "p": "5/7"}, does_not_raise(), id="q = 1 allowed"),
        pytest.param({"q": "0"}, pytest.raises(ValidationError), id="zero q"),
        pytest.param({"p": 0}, pytest.raises(ValidationError), id="zero p"),
        pytest.param({"q": "4/3", "p": "16/9"}, pytest.raises(ValidationError), id="not generic"),
        pytest.param({"genericity_bound": 0}, pytest.raises(ValidationError), id="bound"),
    ],
)
def test_parameter_set_validation(kwargs, expectation):
    with expectation:
        ParameterSet(**kwargs)


def test_parameter_set_defaults_and_json():
    params = ParameterSet()
    assert (params.q, params.p, params.genericity_bound) == (Fraction(4, 3), Fraction(5, 7), 50)
    assert params.q_diff == Fraction(4, 3) - Fraction(3, 4)
    assert ParameterSet.parse_raw(params.json()) == params
    assert '"4/3"' in params.json()


def test_unchecked_parameters_skip_validation():
    params = ParameterSet.unchecked(Fraction(-1), Fraction(5, 7))
    assert params.q == -1


@settings(max_examples=20, deadline=None)
@given(params=parameter_set_strategy())
def test_drawn_parameters_are_generic(params):
    assert check_genericity(params.q, params.p, params.genericity_bound)


@pytest.mark.parametrize(
    "k, q, expected",
    [
        pytest.param(3, Fraction(2), Fraction(21, 4), id="[3] at q=2"),
        pytest.param(0, Fraction(2), Fraction(0), id="[0]"),
        pytest.param(-2, Fraction(2), Fraction(-5, 2), id="[-2] = -[2]"),
        pytest.param(4, Fraction(1), Fraction(4), id="q = 1"),
    ],
)
def test_q_number(k, q, expected):
    assert q_number(k, q) == expected


def test_q_binomial():
    q = Fraction(2)
    assert q_binomial(2, 1, q) == Fraction(5, 2)
    assert q_binomial(3, 0, q) == 1
    assert q_binomial(3, 4, q) == 0
    assert q_binomial(4, 2, Fraction(1)) == 6
