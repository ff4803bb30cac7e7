"""Level-0 actions of U_q'(sl_n^) on tensors and wedges, and the commuting Hamiltonians.

Both actions are assembled from the same Chevalley formulas. They differ only in
the commuting elements y_i: z_i^-1 for the U1 flavor, q^{1-N} Y_i for the U0
flavor. Color indices are read modulo n, color n + 1 being color 1.
"""
import logging
from enum import Enum
from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import regex
from pydantic import BaseModel
from pydantic import conint

from .coeffield import q_binomial
from .coeffield import q_number
from .exceptions import DimensionMismatchError
from .exceptions import GeneratorParseError
from .exceptions import IndexOutOfRangeError
from .hecke import HeckeContext
from .hecke import HeckeOperators
from .hecke import Representation
from .hecke import y_power
from .laurent import LaurentPoly
from .reports import Report
from .reports import run_check
from .wedge import canonical_lift
from .wedge import g_tensor
from .wedge import lambda_map
from .wedge import s_apply
from .wedge import TensorVector
from .wedge import WedgeVector

logger = logging.getLogger(__name__)

_GENERATOR_REGEX = regex.compile(r"(?P<kind>Kplus|Kminus|Kinv|E|F|K)(?P<index>\d+)")


class GeneratorKind(str, Enum):
    E = "E"
    F = "F"
    K = "K"
    Kinv = "Kinv"


_KIND_ALIASES = {"Kplus": GeneratorKind.K, "Kminus": GeneratorKind.Kinv}


class GeneratorName(BaseModel):
    """A Chevalley generator E_ε, F_ε, K_ε or K_ε^-1."""

    kind: GeneratorKind
    index: conint(ge=0)  # type: ignore[valid-type]

    class Config:
        frozen = True

    @classmethod
    def parse(cls, text: str) -> "GeneratorName":
        """Parse names like "E0", "F1", "K2" and "Kinv0"; "Kplus2" and "Kminus0" name K2 and Kinv0.

        Raises:
            GeneratorParseError: The text is not a generator name.
        """
        _match = _GENERATOR_REGEX.fullmatch(text.strip())
        if _match is None:
            raise GeneratorParseError(text)
        kind = _KIND_ALIASES.get(_match["kind"]) or GeneratorKind(_match["kind"])
        return cls(kind=kind, index=int(_match["index"]))

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"


def all_generators(n: int) -> List[GeneratorName]:
    return [GeneratorName(kind=kind, index=eps) for kind in GeneratorKind for eps in range(n)]


class Flavor(str, Enum):
    """U0: y_i = q^{1-N} Y_i. U1: y_i = z_i^-1."""

    U0 = "u0"
    U1 = "u1"

    @property
    def representation(self) -> Representation:
        return Representation.difference if self is Flavor.U0 else Representation.polynomial


def color(epsilon: int, n: int) -> int:
    """Representative of ε modulo n in {1, ..., n}."""
    return (epsilon - 1) % n + 1


def cartan_matrix(n: int) -> List[List[int]]:
    """Cartan matrix of affine sl_n, indices 0, ..., n-1."""
    if n == 2:
        return [[2, -2], [-2, 2]]
    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = 2
        matrix[i][(i + 1) % n] = -1
        matrix[i][(i - 1) % n] = -1
    return matrix


class LevelZeroAction:
    """The action U_0^(N) or U_1^(N) on tensors and, through Λ, on wedges.

    Subclasses may override k_exponent to build negative controls.
    """

    def __init__(self, ctx: HeckeContext, n: int, flavor: Flavor | str) -> None:
        if n < 2:
            raise IndexOutOfRangeError(index=n, lower=2, upper=n + 2)
        self.ctx = ctx
        self.n = n
        self.flavor = Flavor(flavor)
        self._ops = HeckeOperators(ctx, self.flavor.representation)

    @property
    def params(self):
        return self.ctx.params

    def k_exponent(self, epsilon: int, c: int) -> int:
        """Exponent of q in K^ε_i on a slot of color c."""
        return int(c == color(epsilon, self.n)) - int(c == color(epsilon + 1, self.n))

    def weight(self, epsilon: int, colors: Sequence[int]) -> int:
        return sum(self.k_exponent(epsilon, c) for c in colors)

    def _check(self, v: TensorVector, gen: Optional[GeneratorName] = None) -> None:
        if v.dims != (self.ctx.N, self.n):
            raise DimensionMismatchError(left=(self.ctx.N, self.n), right=v.dims)
        if gen is not None and gen.index >= self.n:
            raise IndexOutOfRangeError(index=gen.index, lower=0, upper=self.n - 1)

    # generators on tensors ------------------------------------------------------

    def _k(self, epsilon: int, v: TensorVector, sign: int) -> TensorVector:
        q = self.ctx.q
        return v.apply(lambda key: ((key, q ** (sign * self.weight(epsilon, key[1]))),))

    def _raise(self, epsilon: int, v: TensorVector, i: int) -> TensorVector:
        """E_i^{ε,ε+1} K^ε_{i+1} ... K^ε_N."""
        q, source, target = self.ctx.q, color(epsilon + 1, self.n), color(epsilon, self.n)
        return TensorVector(
            v.N,
            v.n,
            [
                ((exps, colors[: i - 1] + (target,) + colors[i:]), c * q ** self.weight(epsilon, colors[i:]))
                for (exps, colors), c in v.items()
                if colors[i - 1] == source
            ],
        )

    def _lower(self, epsilon: int, v: TensorVector, i: int) -> TensorVector:
        """(K^ε_1)^-1 ... (K^ε_{i-1})^-1 E_i^{ε+1,ε}."""
        q, source, target = self.ctx.q, color(epsilon, self.n), color(epsilon + 1, self.n)
        return TensorVector(
            v.N,
            v.n,
            [
                ((exps, colors[: i - 1] + (target,) + colors[i:]), c * q ** (-self.weight(epsilon, colors[: i - 1])))
                for (exps, colors), c in v.items()
                if colors[i - 1] == source
            ],
        )

    def _y(self, i: int, power: int, v: TensorVector) -> TensorVector:
        if power == 0:
            return v
        op = self._ops.y if power > 0 else self._ops.y_inv
        return v.map_poly(lambda f: op(i, f))

    def act_tensor(self, gen: GeneratorName | str, v: TensorVector) -> TensorVector:
        """Apply a Chevalley generator to a tensor."""
        gen = GeneratorName.parse(gen) if isinstance(gen, str) else gen
        self._check(v, gen)
        eps = gen.index
        delta = int(eps == 0)
        if gen.kind is GeneratorKind.K:
            return self._k(eps, v, 1)
        if gen.kind is GeneratorKind.Kinv:
            return self._k(eps, v, -1)
        result = v.zero()
        for i in range(1, v.N + 1):
            if gen.kind is GeneratorKind.E:
                result = result + self._y(i, -delta, self._raise(eps, v, i))
            else:
                result = result + self._y(i, delta, self._lower(eps, v, i))
        return result

    def act_wedge(self, gen: GeneratorName | str, w: WedgeVector) -> WedgeVector:
        """Λ(x · lift(w)); independent of the lift because the action preserves Ω."""
        return lambda_map(self.act_tensor(gen, canonical_lift(w)), self.params)

    # Hamiltonians -------------------------------------------------------------------

    def hamiltonian_poly(self, a: int, f: LaurentPoly) -> LaurentPoly:
        if a == 0:
            raise ValueError("Hamiltonians are indexed by nonzero integers")
        N = self.ctx.N
        if self.flavor is Flavor.U1:
            return f * LaurentPoly.power_sum(a, N)
        norm = self.ctx.q ** ((1 - N) * a)
        result = f.zero()
        for i in range(1, N + 1):
            result = result + y_power(self.ctx, i, a, f).scale(norm)
        return result

    def hamiltonian_tensor(self, a: int, v: TensorVector) -> TensorVector:
        """h_a = Σ_i (q^{1-N} Y_i)^a for U0, the power sum B_a for U1."""
        self._check(v)
        return v.map_poly(lambda f: self.hamiltonian_poly(a, f))

    def hamiltonian_wedge(self, a: int, w: WedgeVector) -> WedgeVector:
        return lambda_map(self.hamiltonian_tensor(a, canonical_lift(w)), self.params)

    # helpers for the relation checks --------------------------------------------------

    def cartan_element(self, epsilon: int, w: WedgeVector) -> WedgeVector:
        """(K_ε - K_ε^-1)/(q - q^-1), evaluated through the weights so that q = 1 is allowed."""
        q = self.ctx.q
        return w.apply(lambda ks: ((ks, q_number(self.weight(epsilon, _colors(ks, self.n)), q)),))

    def word(self, gens: Iterable[GeneratorName | str], w: WedgeVector) -> WedgeVector:
        """Apply a product of generators, the rightmost first."""
        for gen in reversed(list(gens)):
            w = self.act_wedge(gen, w)
        return w


def _colors(ks: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    return tuple((k - 1) % n + 1 for k in ks)


def _gen(kind: GeneratorKind, index: int) -> GeneratorName:
    return GeneratorName(kind=kind, index=index)


def _serre_holds(
    action: LevelZeroAction, kind: GeneratorKind, i: int, j: int, a_ij: int, w: WedgeVector
) -> bool:
    q = action.ctx.q
    top = 1 - a_ij
    total = w.zero()
    for r in range(top + 1):
        word = [_gen(kind, i)] * r + [_gen(kind, j)] + [_gen(kind, i)] * (top - r)
        total = total + action.word(word, w).scale((-1) ** r * q_binomial(top, r, q))
    return total.is_zero()


def verify_quantum_group_relations(action: LevelZeroAction, corpus: Iterable[WedgeVector]) -> Report:
    """Check the defining relations of U_q'(sl_n^) on a corpus of wedges.

    Args:
        action (LevelZeroAction): Flavor, number of factors and n.
        corpus (Iterable[WedgeVector]): Test wedges.

    Returns:
        Report: One check per relation and index pair.
    """
    corpus = list(corpus)
    n, q = action.n, action.ctx.q
    A = cartan_matrix(n)
    report = Report(suite=f"uq-{action.flavor.value}")
    E, F, K, Kinv = GeneratorKind.E, GeneratorKind.F, GeneratorKind.K, GeneratorKind.Kinv

    def add(name: str, holds: Callable[[WedgeVector], bool]) -> None:
        report.checks.append(run_check(name, corpus, holds))

    for a in range(n):
        add(f"K{a} Kinv{a} = 1", lambda w, a=a: action.word([_gen(K, a), _gen(Kinv, a)], w) == w)
        for b in range(a + 1, n):
            add(
                f"K{a} K{b} = K{b} K{a}",
                lambda w, a=a, b=b: action.word([_gen(K, a), _gen(K, b)], w)
                == action.word([_gen(K, b), _gen(K, a)], w),
            )
    for a in range(n):
        for b in range(n):
            add(
                f"K{a} E{b} Kinv{a} = q^{A[a][b]} E{b}",
                lambda w, a=a, b=b: action.word([_gen(K, a), _gen(E, b), _gen(Kinv, a)], w)
                == action.act_wedge(_gen(E, b), w).scale(q ** A[a][b]),
            )
            add(
                f"K{a} F{b} Kinv{a} = q^{-A[a][b]} F{b}",
                lambda w, a=a, b=b: action.word([_gen(K, a), _gen(F, b), _gen(Kinv, a)], w)
                == action.act_wedge(_gen(F, b), w).scale(q ** (-A[a][b])),
            )
            add(
                f"[E{a}, F{b}] = δ (K{a} - Kinv{a})/(q - q^-1)",
                lambda w, a=a, b=b: action.word([_gen(E, a), _gen(F, b)], w)
                - action.word([_gen(F, b), _gen(E, a)], w)
                == (action.cartan_element(a, w) if a == b else w.zero()),
            )
    for i in range(n):
        for j in range(n):
            if i == j or A[i][j] == 0:
                continue
            for kind in (E, F):
                add(
                    f"Serre {kind.value}{i}^{1 - A[i][j]} {kind.value}{j}",
                    lambda w, i=i, j=j, kind=kind: _serre_holds(action, kind, i, j, A[i][j], w),
                )
    add(
        "K0 K1 ... K(n-1) = 1",
        lambda w: action.word([_gen(K, a) for a in range(n)], w) == w,
    )
    logger.info("quantum group relations (%s, N=%d, n=%d): %s", action.flavor.value, action.ctx.N, n, "pass" if report.passed else "FAIL")
    return report


def verify_hamiltonian_commutation(
    action: LevelZeroAction, powers: Sequence[int], corpus: Iterable[WedgeVector]
) -> Report:
    """Check [h_a, x] = 0 for all generators x and [h_a, h_b] = 0 on a corpus."""
    corpus = list(corpus)
    report = Report(suite=f"hamiltonian-{action.flavor.value}")
    for a in powers:
        for gen in all_generators(action.n):
            report.checks.append(
                run_check(
                    f"[h{a}, {gen}] = 0",
                    corpus,
                    lambda w, a=a, gen=gen: action.hamiltonian_wedge(a, action.act_wedge(gen, w))
                    == action.act_wedge(gen, action.hamiltonian_wedge(a, w)),
                )
            )
        for b in powers:
            if b <= a:
                continue
            report.checks.append(
                run_check(
                    f"[h{a}, h{b}] = 0",
                    corpus,
                    lambda w, a=a, b=b: action.hamiltonian_wedge(a, action.hamiltonian_wedge(b, w))
                    == action.hamiltonian_wedge(b, action.hamiltonian_wedge(a, w)),
                )
            )
    logger.info("hamiltonian commutation (%s): %s", action.flavor.value, "pass" if report.passed else "FAIL")
    return report


def omega_preservation_check(action: LevelZeroAction, corpus: Iterable[TensorVector]) -> Report:
    """Check Λ(x (g_{i,i+1} - S_{i,i+1}) f) = 0 for every generator x and every i."""
    corpus = list(corpus)
    report = Report(suite=f"omega-{action.flavor.value}")
    for i in range(1, action.ctx.N):
        for gen in all_generators(action.n):

            def holds(f: TensorVector, i: int = i, gen: GeneratorName = gen) -> bool:
                null = g_tensor(action.ctx, i, f) - s_apply(action.params, i, f)
                return lambda_map(action.act_tensor(gen, null), action.params).is_zero()

            report.checks.append(run_check(f"Λ({gen} (g{i} - S{i}) f) = 0", corpus, holds))
    return report


__all__ = (
    "all_generators",
    "cartan_matrix",
    "color",
    "Flavor",
    "GeneratorKind",
    "GeneratorName",
    "LevelZeroAction",
    "omega_preservation_check",
    "verify_hamiltonian_commutation",
    "verify_quantum_group_relations",
)
