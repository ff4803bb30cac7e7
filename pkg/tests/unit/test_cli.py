from fractions import Fraction

import pytest
from qfock.cli import main
from qfock.cli import suites
from qfock.cli.commands import ActionResult
from qfock.cli.commands import DecompositionResult
from qfock.cli.commands import EXIT_DEGENERATE
from qfock.cli.commands import EXIT_OK
from qfock.cli.commands import EXIT_USAGE
from qfock.cli.commands import EXIT_VERIFICATION_FAILED
from qfock.cli.commands import FockResult
from qfock.cli.commands import HamiltonianResult
from qfock.cli.config import RunConfig
from qfock.laurent import LaurentPoly
from qfock.macdonald import MacdonaldPolyModel
from qfock.reports import RelationCheck
from qfock.reports import Report
from qfock.wedge import WedgeVector

WEDGE_01 = '{"N": 2, "n": 2, "terms": [{"ks": [0, 1], "coeff": "1"}]}'


def run(capsys, *argv: str):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_macdonald_command(capsys):
    code, out = run(capsys, "macdonald", "--nvars", "1", "--lambda", "3")
    assert code == EXIT_OK
    model = MacdonaldPolyModel.parse_raw(out)
    assert model.label == [3]
    assert LaurentPoly.from_model(model.poly) == LaurentPoly.monomial((3,))


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param(["--q", "1/1", "macdonald", "--nvars", "2", "--lambda", "1,0"], id="flags first"),
        pytest.param(["macdonald", "--nvars", "2", "--lambda", "1,0", "--q", "1/1"], id="flags last"),
    ],
)
def test_q_equal_one_gives_monomials(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == EXIT_OK
    assert LaurentPoly.from_model(MacdonaldPolyModel.parse_raw(out).poly) == LaurentPoly.monomial((1, 0))


def test_environment_and_flags(capsys, monkeypatch):
    monkeypatch.setenv("QFOCK_Q", "1/1")
    code, out = run(capsys, "macdonald", "--nvars", "2", "--lambda", "1,0")
    assert code == EXIT_OK
    assert LaurentPoly.from_model(MacdonaldPolyModel.parse_raw(out).poly) == LaurentPoly.monomial((1, 0))

    monkeypatch.setenv("QFOCK_Q", "0")
    assert run(capsys, "macdonald", "--nvars", "2", "--lambda", "1,0")[0] == EXIT_USAGE
    assert run(capsys, "--q", "4/3", "macdonald", "--nvars", "2", "--lambda", "1,0")[0] == EXIT_OK


def test_run_config_defaults(monkeypatch):
    monkeypatch.delenv("QFOCK_Q", raising=False)
    monkeypatch.delenv("QFOCK_P", raising=False)
    monkeypatch.setenv("QFOCK_BOUND", "7")
    cfg = RunConfig.from_overrides({"q": None, "p": "2/3"})
    assert str(cfg.q) == "4/3"
    assert str(cfg.p) == "2/3"
    assert cfg.bound == 7
    assert cfg.params().genericity_bound == 7


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param([], id="no command"),
        pytest.param(["frobnicate"], id="unknown command"),
        pytest.param(["macdonald", "--nvars", "2", "--lambda", "1,x"], id="bad composition"),
        pytest.param(["macdonald", "--nvars", "2", "--lambda", "1,0,0"], id="wrong length"),
        pytest.param(["--q", "4/3", "--p", "16/9", "macdonald", "--nvars", "1", "--lambda", "0"], id="not generic"),
        pytest.param(["verify", "--suite", "nonsense"], id="unknown suite"),
        pytest.param(["act", "--wedge", WEDGE_01, "--gen", "E0,G1"], id="unknown generator"),
        pytest.param(["act", "--wedge", "1,0", "--gen", "E0"], id="wedge is not json"),
        pytest.param(["act", "--wedge", '{"N": 2, "n": 2, "terms": [{"ks": [1], "coeff": "1"}]}', "--gen", "E0"], id="short term"),
        pytest.param(["act", "--n", "3", "--wedge", WEDGE_01, "--gen", "E0"], id="n disagrees"),
        pytest.param(["hamiltonian", "--n", "2", "--m", "1,0", "--e", "1,2"], id="decreasing label"),
        pytest.param(["hamiltonian", "--n", "2", "--m", "0,0", "--e", "1,2"], id="inadmissible colors"),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_degenerate_parameters(capsys):
    # p = q passes the bound-1 genericity check but makes (2,0) and (0,2) share their eigenvalues
    code, _ = run(capsys, "--q", "4/3", "--p", "4/3", "--bound", "1", "macdonald", "--nvars", "2", "--lambda", "2,0")
    assert code == EXIT_DEGENERATE


def test_act_command(capsys):
    code, out = run(capsys, "act", "--n", "2", "--wedge", WEDGE_01, "--gen", "K1")
    assert code == EXIT_OK
    result = ActionResult.parse_raw(out)
    assert result.generators == ["K1"]
    assert result.image == result.source
    assert [term.ks for term in result.source.terms] == [[1, 0]]


def test_hamiltonian_command(capsys):
    code, out = run(capsys, "hamiltonian", "--n", "2", "--m", "0,1", "--e", "1,2", "--power", "-1")
    assert code == EXIT_OK
    result = HamiltonianResult.parse_raw(out)
    assert result.eigenvector
    assert result.power == -1


def test_decompose_command(capsys):
    code, out = run(capsys, "decompose", "--n", "2", "--N", "2", "--window", "0..1")
    assert code == EXIT_OK
    result = DecompositionResult.parse_raw(out)
    assert [block.m for block in result.blocks] == [[0, 0], [0, 1], [1, 1]]
    assert [block.dim for block in result.blocks] == [1, 4, 1]


def test_negative_ranges_are_values(capsys):
    code, out = run(capsys, "decompose", "--n", "2", "--N", "3", "--window", "-1..1", "--degrees", "-1..0")
    assert code == EXIT_OK
    result = DecompositionResult.parse_raw(out)
    assert [block.m for block in result.blocks] == [[-1, -1, 1], [-1, 0, 0], [-1, 0, 1]]
    code, _ = run(capsys, "verify", "--suite", "hecke", "--N", "2", "--entries", "-2..2")
    assert code == EXIT_OK


def test_text_output(capsys):
    code, out = run(capsys, "--format", "text", "decompose", "--n", "2", "--N", "2", "--window", "0..1")
    assert code == EXIT_OK
    assert out.splitlines() == ["E[0, 0]: dim 1", "E[0, 1]: dim 4", "E[1, 1]: dim 1"]


@pytest.mark.parametrize(
    "emit, has_blocks, has_basis",
    [
        pytest.param("blocks", True, False, id="blocks"),
        pytest.param("basis", False, True, id="basis"),
        pytest.param("spectrum", True, False, id="spectrum"),
    ],
)
def test_fock_command(capsys, emit, has_blocks, has_basis):
    code, out = run(capsys, "fock", "--M", "0", "--n", "2", "--degree", "1", "--emit", emit)
    assert code == EXIT_OK
    result = FockResult.parse_raw(out)
    assert result.dim == 4
    assert bool(result.blocks) is has_blocks
    assert bool(result.basis) is has_basis


def test_fock_vacuum(capsys):
    code, out = run(capsys, "fock", "--M", "0", "--n", "2", "--degree", "0")
    assert code == EXIT_OK
    result = FockResult.parse_raw(out)
    assert result.dim == 1
    assert [block.m_head for block in result.blocks] == [[]]


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param(["--suite", "hecke", "--N", "3"], id="hecke"),
        pytest.param(["--suite", "macdonald", "--N", "2"], id="macdonald"),
        pytest.param(["--suite", "wedge", "--N", "2", "--samples", "20"], id="wedge"),
        pytest.param(["--suite", "uq", "--N", "2", "--entries", "0..1", "--samples", "5"], id="uq"),
        pytest.param(["--suite", "decomp", "--N", "2", "--entries", "0..1"], id="decomp"),
        pytest.param(["--suite", "drinfeld", "--n", "3", "--entries", "0..1"], id="drinfeld"),
        pytest.param(["--suite", "fock-stabilize", "--M", "1", "--k", "1"], id="fock stabilize"),
        pytest.param(["--suite", "fock-complete", "--M", "0", "--k", "2"], id="fock complete"),
    ],
)
def test_verify_command(capsys, argv):
    code, out = run(capsys, "verify", *argv)
    assert code == EXIT_OK, out
    assert Report.parse_raw(out).passed


def test_verification_failure(capsys, monkeypatch):
    def failing(request):
        return Report(suite="failing", checks=[RelationCheck(relation="1 = 2", status="fail", checked=1, witness="1")])

    monkeypatch.setitem(suites._SUITES, "failing", failing)
    code, out = run(capsys, "--format", "text", "verify", "--suite", "failing")
    assert code == EXIT_VERIFICATION_FAILED
    assert out.splitlines()[0] == "failing: FAIL"
    assert "(witness 1)" in out


def test_suite_registry():
    assert {"hecke", "macdonald", "wedge", "uq", "decomp", "fock-spectrum"} <= set(suites.suite_names())


def test_act_reads_wedge_json(capsys):
    wedge = WedgeVector(2, 2, {(1, 0): 1, (2, -1): Fraction(-1, 2)})
    code, out = run(capsys, "act", "--wedge", wedge.to_model().json(), "--gen", "Kinv1,K1")
    assert code == EXIT_OK
    result = ActionResult.parse_raw(out)
    assert WedgeVector.from_model(result.source) == wedge
    assert WedgeVector.from_model(result.image) == wedge
    assert result.generators == ["Kinv1", "K1"]


def test_act_accepts_kplus_and_kminus(capsys):
    code, out = run(capsys, "act", "--wedge", WEDGE_01, "--gen", "Kminus1,Kplus1")
    assert code == EXIT_OK
    assert ActionResult.parse_raw(out).generators == ["Kinv1", "K1"]


def test_hamiltonian_suite_uses_the_requested_flavor(capsys):
    code, out = run(capsys, "verify", "--suite", "hamiltonian", "--flavor", "u1", "--N", "2", "--entries", "0..1")
    assert code == EXIT_OK, out
    assert Report.parse_raw(out).suite == "hamiltonian-u1"
