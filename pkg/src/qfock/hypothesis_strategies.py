"""Strategies for testing."""
import logging
from fractions import Fraction
from typing import List
from typing import Tuple

from hypothesis import assume as assume
from hypothesis import strategies as st

from .coeffield import check_genericity
from .coeffield import DEFAULT_BOUND
from .coeffield import ParameterSet
from .decomp import ModuleLabel
from .laurent import LaurentPoly
from .macdonald import Composition
from .qaffine import GeneratorKind
from .qaffine import GeneratorName
from .wedge import TensorVector
from .wedge import WedgeIndex
from .wedge import WedgeVector

logger = logging.getLogger(__name__)

MAX_TERMS = 4

scalar_strategy: st.SearchStrategy[Fraction] = st.fractions(
    min_value=-5, max_value=5, max_denominator=7
).filter(lambda c: c != 0)


@st.composite
def parameter_set_strategy(draw: st.DrawFn, bound: int = DEFAULT_BOUND) -> ParameterSet:
    """Draw generic parameters q, p with small numerators and denominators.

    Args:
        draw (st.DrawFn): Hypothesis Draw Function.
        bound (int): Genericity bound.

    Returns:
        ParameterSet: Validated parameters.
    """
    q = draw(st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=9))
    p = draw(st.fractions(min_value=Fraction(-5), max_value=5, max_denominator=9))
    assume(q not in (0, 1) and p != 0)
    assume(check_genericity(q, p, bound).generic)
    return ParameterSet(q=q, p=p, genericity_bound=bound)


@st.composite
def composition_strategy(draw: st.DrawFn, N: int = 2, low: int = -2, high: int = 2) -> Composition:
    entries = draw(st.lists(st.integers(low, high), min_size=N, max_size=N))
    return Composition(entries=tuple(entries))


@st.composite
def laurent_poly_strategy(draw: st.DrawFn, N: int = 2, low: int = -2, high: int = 2) -> LaurentPoly:
    """Draw a Laurent polynomial with at most MAX_TERMS terms and exponents in [low, high]."""
    exponents = st.tuples(*[st.integers(low, high)] * N)
    terms = draw(st.dictionaries(exponents, scalar_strategy, max_size=MAX_TERMS))
    return LaurentPoly(N, terms)


@st.composite
def tensor_strategy(draw: st.DrawFn, N: int = 2, n: int = 2, low: int = -1, high: int = 1) -> TensorVector:
    keys = st.tuples(
        st.tuples(*[st.integers(low, high)] * N),
        st.tuples(*[st.integers(1, n)] * N),
    )
    terms = draw(st.dictionaries(keys, scalar_strategy, min_size=1, max_size=MAX_TERMS))
    return TensorVector(N, n, terms)


@st.composite
def index_sequence_strategy(draw: st.DrawFn, N: int = 2, span: int = 6) -> Tuple[int, ...]:
    """Index sequences k_1, ..., k_N in [-span, span], not necessarily ordered or distinct."""
    return tuple(draw(st.lists(st.integers(-span, span), min_size=N, max_size=N)))


@st.composite
def wedge_index_strategy(draw: st.DrawFn, N: int = 2, span: int = 6) -> WedgeIndex:
    ks = draw(st.sets(st.integers(-span, span), min_size=N, max_size=N))
    return tuple(sorted(ks, reverse=True))


@st.composite
def wedge_strategy(draw: st.DrawFn, N: int = 2, n: int = 2, span: int = 6) -> WedgeVector:
    terms = draw(st.dictionaries(wedge_index_strategy(N, span), scalar_strategy, min_size=1, max_size=MAX_TERMS))
    return WedgeVector(N, n, terms)


@st.composite
def module_label_strategy(draw: st.DrawFn, N: int = 2, n: int = 2, low: int = -1, high: int = 2) -> ModuleLabel:
    """Draw a nondecreasing n-strict sequence."""
    m: List[int] = sorted(draw(st.lists(st.integers(low, high), min_size=N, max_size=N)))
    assume(all(m.count(value) <= n for value in set(m)))
    return ModuleLabel(m=tuple(m), n=n)


generator_name_strategy: st.SearchStrategy[GeneratorName] = st.builds(
    GeneratorName,
    kind=st.sampled_from(GeneratorKind),
    index=st.integers(0, 1),
)


def _hypothesis_setup_hook() -> None:  # pyright: ignore[reportUnusedFunction]
    logger.debug("Registering strategies")
    st.register_type_strategy(ParameterSet, parameter_set_strategy())
    st.register_type_strategy(Composition, composition_strategy())
    st.register_type_strategy(LaurentPoly, laurent_poly_strategy())
    st.register_type_strategy(ModuleLabel, module_label_strategy())
    st.register_type_strategy(GeneratorName, generator_name_strategy)


__all__ = (
    "composition_strategy",
    "generator_name_strategy",
    "index_sequence_strategy",
    "laurent_poly_strategy",
    "module_label_strategy",
    "parameter_set_strategy",
    "scalar_strategy",
    "tensor_strategy",
    "wedge_index_strategy",
    "wedge_strategy",
)
