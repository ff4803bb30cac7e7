from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from qfock.coeffield import ParameterSet
from qfock.exceptions import IndexOutOfRangeError
from qfock.hecke import g_apply
from qfock.hecke import g_apply_reference
from qfock.hecke import HeckeContext
from qfock.hecke import HeckeOperators
from qfock.hecke import leading_coefficient
from qfock.hecke import monomial_box
from qfock.hecke import Representation
from qfock.hecke import verify_hecke_relations
from qfock.hecke import xi_apply
from qfock.hecke import y_apply
from qfock.hecke import y_power
from qfock.hypothesis_strategies import laurent_poly_strategy
from qfock.laurent import LaurentPoly

PARAMS = ParameterSet()
Q, P = PARAMS.q, PARAMS.p
DIFF = Q - 1 / Q


def z(*exps: int, c=1) -> LaurentPoly:
    return LaurentPoly.monomial(exps, c)


@pytest.fixture
def ctx2() -> HeckeContext:
    return HeckeContext(N=2, params=PARAMS)


@pytest.mark.parametrize(
    "f, expected",
    [
        pytest.param(z(0, 0), z(0, 0, c=Q), id="constant"),
        pytest.param(z(1, 0), z(0, 1, c=Q) + z(1, 0, c=DIFF), id="z1"),
        pytest.param(z(0, 1), z(1, 0, c=1 / Q), id="z2"),
        pytest.param(z(1, 1), z(1, 1, c=Q), id="symmetric"),
    ],
)
def test_g_on_monomials(ctx2, f, expected):
    assert g_apply(ctx2, 1, 2, f) == expected
    assert g_apply_reference(ctx2, 1, 2, f) == expected


def test_g_inverse_is_g_minus_q_difference(ctx2):
    f = z(2, -1) + z(0, 3, c=Fraction(1, 2))
    assert g_apply(ctx2, 1, 2, f, sign=-1) == g_apply(ctx2, 1, 2, f) - f.scale(DIFF)
    assert g_apply(ctx2, 1, 2, g_apply(ctx2, 1, 2, f, sign=-1)) == f


def test_xi_is_swap_after_g(ctx2):
    f = z(2, -1) + z(-1, 1)
    assert xi_apply(ctx2, 1, 2, 1, f) == g_apply(ctx2, 1, 2, f).swap_vars(1, 2)
    assert xi_apply(ctx2, 1, 2, -1, xi_apply(ctx2, 1, 2, 1, f)) == f


@settings(max_examples=60, deadline=None)
@given(f=laurent_poly_strategy(N=3))
def test_closed_form_agrees_with_exact_division(f):
    ctx = HeckeContext(N=3, params=PARAMS)
    for i, j in ((1, 2), (2, 3), (1, 3)):
        assert g_apply(ctx, i, j, f) == g_apply_reference(ctx, i, j, f)


def test_cherednik_operators_on_z1(ctx2):
    assert y_apply(ctx2, 1, 1, z(1, 0)) == z(1, 0, c=P / Q) - z(0, 1, c=P * DIFF)
    assert y_apply(ctx2, 2, 1, z(1, 0)) == z(1, 0, c=Q) + z(0, 1, c=P * DIFF)


def test_single_variable_cherednik_is_dilation():
    ctx = HeckeContext(N=1, params=PARAMS)
    assert y_apply(ctx, 1, 1, z(3)) == z(3, c=P**3)
    assert y_power(ctx, 1, -2, z(3)) == z(3, c=P**-6)


def test_y_power_inverts(ctx2):
    f = z(1, -1) + z(2, 0)
    assert y_power(ctx2, 2, -2, y_power(ctx2, 2, 2, f)) == f
    assert y_power(ctx2, 1, 0, f) == f


@pytest.mark.parametrize(
    "exps, i, expected",
    [
        pytest.param((1, 0), 1, P / Q, id="(1,0) i=1"),
        pytest.param((1, 0), 2, Q, id="(1,0) i=2"),
        pytest.param((0, 1), 1, Q, id="(0,1) i=1"),
        pytest.param((0, 1), 2, P / Q, id="(0,1) i=2"),
        pytest.param((0, 0), 1, 1 / Q, id="(0,0) i=1"),
    ],
)
def test_leading_coefficients(ctx2, exps, i, expected):
    assert leading_coefficient(ctx2, i, exps) == expected


@pytest.mark.parametrize("representation", list(Representation))
@pytest.mark.parametrize("N", [2, 3])
def test_affine_hecke_relations(N, representation):
    ctx = HeckeContext(N=N, params=PARAMS)
    report = verify_hecke_relations(ctx, representation, monomial_box(N, -1, 1))
    assert report.passed, report.failures()
    assert all(check.checked == 3**N for check in report.checks)


def test_affine_hecke_relations_on_full_box():
    ctx = HeckeContext(N=2, params=PARAMS)
    for representation in Representation:
        assert verify_hecke_relations(ctx, representation, monomial_box(2, -2, 2)).passed


def test_relations_hold_at_q_equal_one():
    ctx = HeckeContext(N=3, params=ParameterSet(q=1, p=Fraction(5, 7)))
    assert verify_hecke_relations(ctx, Representation.difference, monomial_box(3, -1, 1)).passed


class _ScaledT(HeckeOperators):
    def t(self, i, f):
        return super().t(i, f).scale(2)


def test_corrupted_generator_is_detected():
    ctx = HeckeContext(N=2, params=PARAMS)
    report = verify_hecke_relations(
        ctx, "polynomial", monomial_box(2, -1, 1), operators=_ScaledT(ctx, "polynomial")
    )
    assert not report.passed
    assert any(check.witness for check in report.failures())


def test_indices_are_checked(ctx2):
    with pytest.raises(IndexOutOfRangeError):
        g_apply(ctx2, 1, 3, z(0, 0))
    with pytest.raises(ValueError):
        g_apply(ctx2, 1, 1, z(0, 0))
    with pytest.raises(IndexOutOfRangeError):
        y_apply(ctx2, 3, 1, z(0, 0))
