from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from qfock.coeffield import ParameterSet
from qfock.exceptions import IndexOutOfRangeError
from qfock.exceptions import LengthMismatchError
from qfock.exceptions import ParameterDegeneracyError
from qfock.hecke import g_apply
from qfock.hecke import HeckeContext
from qfock.hecke import leading_coefficient
from qfock.hecke import y_apply
from qfock.hypothesis_strategies import composition_strategy
from qfock.laurent import LaurentPoly
from qfock.macdonald import check_triangularity
from qfock.macdonald import Composition
from qfock.macdonald import dominance_leq
from qfock.macdonald import eigenvalue_vector
from qfock.macdonald import hamiltonian_eigenvalue
from qfock.macdonald import hecke_coeffs
from qfock.macdonald import hecke_recursion_step
from qfock.macdonald import is_unitriangular
from qfock.macdonald import lower_set
from qfock.macdonald import macdonald_poly
from qfock.macdonald import MacdonaldPolyModel
from qfock.macdonald import Ordering
from qfock.macdonald import verify_macdonald
from qfock.macdonald import zeta

PARAMS = ParameterSet()
Q, P = PARAMS.q, PARAMS.p
DIFF = Q - 1 / Q


def z(*exps: int, c=1) -> LaurentPoly:
    return LaurentPoly.monomial(exps, c)


@pytest.mark.parametrize(
    "lam, mu, expected",
    [
        pytest.param((1, 0), (0, 1), Ordering.greater, id="same partition"),
        pytest.param((0, 1), (1, 0), Ordering.less, id="same partition reversed"),
        pytest.param((2, 0), (1, 1), Ordering.greater, id="partition dominates"),
        pytest.param((1, 1), (0, 2), Ordering.less, id="partition dominated"),
        pytest.param((1, 0), (1, 1), Ordering.incomparable, id="different sizes"),
        pytest.param((4, 1, 1), (3, 3, 0), Ordering.incomparable, id="incomparable partitions"),
        pytest.param((0, 2, 1), (0, 2, 1), Ordering.equal, id="equal"),
    ],
)
def test_dominance(lam, mu, expected):
    assert dominance_leq(lam, mu) is expected


def test_dominance_needs_equal_lengths():
    with pytest.raises(LengthMismatchError):
        dominance_leq((1, 0), (1, 0, 0))


def test_composition_partition_and_sigma():
    lam = Composition.of((1, 0, 1))
    assert lam.partition == (1, 1, 0)
    assert lam.sigma == (1, 3, 2)
    assert lam.swapped(2) == Composition.of((1, 1, 0))
    assert Composition.of((0, 1)).sigma == (2, 1)


@pytest.mark.parametrize(
    "lam, expected",
    [
        pytest.param((1, 0), (P / Q, Q), id="(1,0)"),
        pytest.param((0, 1), (Q, P / Q), id="(0,1)"),
        pytest.param((0, 0), (1 / Q, Q), id="(0,0)"),
        pytest.param((2, 0, 1), (P**2 / Q**2, Q**2, P), id="(2,0,1)"),
    ],
)
def test_zeta(lam, expected):
    assert eigenvalue_vector(lam, PARAMS) == expected


def test_zeta_index_is_checked():
    with pytest.raises(IndexOutOfRangeError):
        zeta((1, 0), 3, PARAMS)


def test_hamiltonian_eigenvalue():
    assert hamiltonian_eigenvalue((0, 0), 1, PARAMS) == Q**-2 + 1
    assert hamiltonian_eigenvalue((1, 0), -1, PARAMS) == (Q / P) * Q + 1


def test_lower_set_is_sorted():
    assert lower_set((1, 0)) == [Composition.of((0, 1)), Composition.of((1, 0))]
    members = lower_set((2, 0, 0))
    assert members[-1] == Composition.of((2, 0, 0))
    assert Composition.of((0, 1, 1)) in members
    assert Composition.of((1, 1, 0)) in members


@pytest.mark.parametrize(
    "N, lam, expected",
    [
        pytest.param(1, (3,), z(3), id="single variable"),
        pytest.param(2, (0, 0), z(0, 0), id="constant"),
        pytest.param(2, (0, 1), z(0, 1), id="minimal"),
        pytest.param(2, (1, 0), z(1, 0) + z(0, 1, c=P * DIFF / (Q - P / Q)), id="(1,0)"),
        pytest.param(2, (-1, -1), z(-1, -1), id="negative"),
    ],
)
def test_macdonald_poly(N, lam, expected):
    ctx = HeckeContext(N=N, params=PARAMS)
    assert macdonald_poly(ctx, lam).poly == expected


def test_macdonald_poly_at_q_equal_one_is_a_monomial():
    ctx = HeckeContext(N=2, params=ParameterSet(q=1, p=Fraction(5, 7)))
    assert macdonald_poly(ctx, (1, 0)).poly == z(1, 0)


def test_macdonald_poly_checks_length():
    with pytest.raises(LengthMismatchError):
        macdonald_poly(HeckeContext(N=2, params=PARAMS), (1, 0, 0))


@settings(max_examples=25, deadline=None)
@given(lam=composition_strategy(N=3, low=-1, high=1))
def test_eigen_property(lam):
    ctx = HeckeContext(N=3, params=PARAMS)
    phi = macdonald_poly(ctx, lam)
    assert is_unitriangular(phi)
    for i in range(1, 4):
        assert y_apply(ctx, i, 1, phi.poly) == phi.poly.scale(zeta(lam, i, PARAMS))
        assert leading_coefficient(ctx, i, lam.entries) == zeta(lam, i, PARAMS)
        assert check_triangularity(ctx, i, lam)


def test_hecke_coefficients():
    assert hecke_coeffs((0, 0), 1, PARAMS) == (Q, 0)
    x = P / Q**2
    assert hecke_coeffs((0, 1), 1, PARAMS) == (DIFF * x / (x - 1), 1 / Q)
    a_coeff, b_coeff = hecke_coeffs((1, 0), 1, PARAMS)
    x = 1 / x
    assert a_coeff == DIFF * x / (x - 1)
    assert b_coeff == (x - Q**2) * (Q**2 * x - 1) / (x - 1) ** 2 / Q


def test_hecke_action_formula():
    ctx = HeckeContext(N=2, params=PARAMS)
    phi = macdonald_poly(ctx, (0, 1)).poly
    a_coeff, b_coeff = hecke_coeffs((0, 1), 1, PARAMS)
    assert g_apply(ctx, 1, 2, phi) == phi.scale(a_coeff) + macdonald_poly(ctx, (1, 0)).poly.scale(b_coeff)


def test_hecke_recursion_reaches_the_swapped_polynomial():
    ctx = HeckeContext(N=3, params=PARAMS)
    for lam, i in (((0, 1, 0), 1), ((1, 0, -1), 2), ((0, 0, 1), 2)):
        step = hecke_recursion_step(ctx, lam, i)
        assert step.label == Composition.of(lam).swapped(i)
        assert step.poly == macdonald_poly(ctx, step.label).poly


def test_hecke_recursion_needs_distinct_entries():
    with pytest.raises(ValueError):
        hecke_recursion_step(HeckeContext(N=2, params=PARAMS), (1, 1), 1)


def test_degenerate_parameters_are_reported():
    params = ParameterSet.unchecked(Q, Q**2)
    with pytest.raises(ParameterDegeneracyError):
        hecke_coeffs((0, 1), 1, params)


def test_model_serialization():
    phi = macdonald_poly(HeckeContext(N=2, params=PARAMS), (1, 0))
    model = phi.to_model()
    assert model.label == [1, 0]
    assert MacdonaldPolyModel.parse_raw(model.json()) == model
    assert LaurentPoly.from_model(model.poly) == phi.poly


@pytest.mark.parametrize(
    "N, low, high",
    [
        pytest.param(2, -2, 2, id="N=2"),
        pytest.param(3, -1, 1, id="N=3"),
    ],
)
def test_macdonald_suite(N, low, high):
    report = verify_macdonald(HeckeContext(N=N, params=PARAMS), low, high)
    assert report.passed, report.failures()
