from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from qfock.coeffield import ParameterSet
from qfock.decomp import HAMILTONIAN_POWERS
from qfock.exceptions import DimensionMismatchError
from qfock.exceptions import GeneratorParseError
from qfock.exceptions import IndexOutOfRangeError
from qfock.hecke import HeckeContext
from qfock.hypothesis_strategies import generator_name_strategy
from qfock.hypothesis_strategies import tensor_strategy
from qfock.qaffine import all_generators
from qfock.qaffine import cartan_matrix
from qfock.qaffine import color
from qfock.qaffine import Flavor
from qfock.qaffine import GeneratorKind
from qfock.qaffine import GeneratorName
from qfock.qaffine import LevelZeroAction
from qfock.qaffine import omega_preservation_check
from qfock.qaffine import verify_hamiltonian_commutation
from qfock.qaffine import verify_quantum_group_relations
from qfock.wedge import basis_wedges
from qfock.wedge import TensorVector
from qfock.wedge import WedgeVector

PARAMS = ParameterSet()
Q, P = PARAMS.q, PARAMS.p


def corpus(N: int, n: int, low: int, high: int):
    return [WedgeVector.basis(ks, n) for ks in basis_wedges(N, n, range(low, high + 1))]


@pytest.mark.parametrize(
    "text, kind, index",
    [
        pytest.param("E0", GeneratorKind.E, 0, id="E0"),
        pytest.param("F12", GeneratorKind.F, 12, id="two digits"),
        pytest.param(" K1 ", GeneratorKind.K, 1, id="whitespace"),
        pytest.param("Kinv2", GeneratorKind.Kinv, 2, id="inverse"),
        pytest.param("Kplus1", GeneratorKind.K, 1, id="Kplus alias"),
        pytest.param("Kminus0", GeneratorKind.Kinv, 0, id="Kminus alias"),
    ],
)
def test_generator_names(text, kind, index):
    gen = GeneratorName.parse(text)
    assert (gen.kind, gen.index) == (kind, index)
    assert GeneratorName.parse(str(gen)) == gen


@pytest.mark.parametrize("text", ["X1", "E", "E-1", "Kinv", "e0", "Kplus", "Kminus-1"])
def test_bad_generator_names(text):
    with pytest.raises(GeneratorParseError):
        GeneratorName.parse(text)


@given(gen=generator_name_strategy)
def test_generator_names_print_and_parse(gen):
    assert GeneratorName.parse(str(gen)) == gen


def test_all_generators():
    names = [str(gen) for gen in all_generators(2)]
    assert names == ["E0", "E1", "F0", "F1", "K0", "K1", "Kinv0", "Kinv1"]


def test_cartan_matrix_and_colors():
    assert cartan_matrix(2) == [[2, -2], [-2, 2]]
    assert cartan_matrix(3) == [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]
    assert [color(e, 3) for e in range(-1, 5)] == [2, 3, 1, 2, 3, 1]


def test_single_factor_action():
    action = LevelZeroAction(HeckeContext(N=1, params=PARAMS), 2, Flavor.U0)
    # u_1 = z^0 v_1, u_-1 = z^1 v_1, u_0 = z^1 v_2
    assert action.act_wedge("E0", WedgeVector.basis((1,), 2)) == WedgeVector.basis((2,), 2)
    assert action.act_wedge("E0", WedgeVector.basis((-1,), 2)) == WedgeVector(1, 2, {(0,): 1 / P})
    assert action.act_wedge("E1", WedgeVector.basis((0,), 2)) == WedgeVector.basis((-1,), 2)
    assert action.act_wedge("F1", WedgeVector.basis((-1,), 2)) == WedgeVector.basis((0,), 2)
    assert action.act_wedge("K1", WedgeVector.basis((1,), 2)) == WedgeVector(1, 2, {(1,): Q})
    assert action.act_wedge("K0", WedgeVector.basis((1,), 2)) == WedgeVector(1, 2, {(1,): 1 / Q})


def test_u1_uses_multiplication_by_z():
    action = LevelZeroAction(HeckeContext(N=1, params=PARAMS), 2, Flavor.U1)
    # y = z^-1, so E0 on z^1 v_1 gives z^2 v_2
    assert action.act_wedge("E0", WedgeVector.basis((-1,), 2)) == WedgeVector.basis((-2,), 2)


@pytest.mark.parametrize("flavor", list(Flavor))
@pytest.mark.parametrize(
    "n, N, low, high",
    [
        pytest.param(2, 2, -1, 1, id="n=2 N=2"),
        pytest.param(2, 3, -1, 1, id="n=2 N=3"),
        pytest.param(3, 3, 0, 1, id="n=3 N=3"),
    ],
)
def test_quantum_group_relations(flavor, n, N, low, high):
    action = LevelZeroAction(HeckeContext(N=N, params=PARAMS), n, flavor)
    report = verify_quantum_group_relations(action, corpus(N, n, low, high))
    assert report.passed, report.failures()


def test_quantum_group_relations_at_q_equal_one():
    params = ParameterSet(q=1, p=Fraction(5, 7))
    action = LevelZeroAction(HeckeContext(N=2, params=params), 2, Flavor.U0)
    assert verify_quantum_group_relations(action, corpus(2, 2, -1, 1)).passed


@pytest.mark.parametrize("flavor", list(Flavor))
def test_hamiltonians_commute_with_the_action(flavor):
    action = LevelZeroAction(HeckeContext(N=2, params=PARAMS), 2, flavor)
    report = verify_hamiltonian_commutation(action, HAMILTONIAN_POWERS, corpus(2, 2, -1, 1))
    assert report.passed, report.failures()


def test_hamiltonian_rejects_zero_power():
    action = LevelZeroAction(HeckeContext(N=2, params=PARAMS), 2, Flavor.U0)
    with pytest.raises(ValueError):
        action.hamiltonian_wedge(0, WedgeVector.basis((1, 0), 2))


@settings(max_examples=15, deadline=None)
@given(f=tensor_strategy(N=2, n=2))
def test_action_preserves_the_relations_subspace(f):
    for flavor in Flavor:
        action = LevelZeroAction(HeckeContext(N=2, params=PARAMS), 2, flavor)
        assert omega_preservation_check(action, [f]).passed


class _WrongWeights(LevelZeroAction):
    def k_exponent(self, epsilon, c):
        return 2 * super().k_exponent(epsilon, c)


def test_corrupted_weights_are_detected():
    action = _WrongWeights(HeckeContext(N=2, params=PARAMS), 2, Flavor.U0)
    report = verify_quantum_group_relations(action, corpus(2, 2, 0, 1))
    assert not report.passed
    assert any("E" in check.relation for check in report.failures())


def test_word_applies_rightmost_first():
    action = LevelZeroAction(HeckeContext(N=1, params=PARAMS), 2, Flavor.U0)
    w = WedgeVector.basis((1,), 2)
    assert action.word(["F1", "E0"], w) == action.act_wedge("F1", action.act_wedge("E0", w))


def test_shapes_and_indices_are_checked():
    action = LevelZeroAction(HeckeContext(N=2, params=PARAMS), 2, Flavor.U0)
    with pytest.raises(IndexOutOfRangeError):
        action.act_tensor("E2", TensorVector.pure((0, 0), (1, 2), 2))
    with pytest.raises(DimensionMismatchError):
        action.act_tensor("E0", TensorVector.pure((0, 0, 0), (1, 2, 1), 2))
    with pytest.raises(IndexOutOfRangeError):
        LevelZeroAction(HeckeContext(N=2, params=PARAMS), 1, Flavor.U0)
