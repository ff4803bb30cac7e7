"""Tokenizer for the list and range arguments of the command line."""
import logging
from typing import Generator
from typing import Iterable
from typing import List
from typing import Tuple

import regex

from ..decomp import LabelWindow
from ..exceptions import UsageError
from ..qaffine import GeneratorName

logger = logging.getLogger(__name__)

LIST_SEPARATOR = ","
RANGE_SEPARATOR = ".."
SEPARATORS = (LIST_SEPARATOR, RANGE_SEPARATOR)
WHITESPACE_REGEX = regex.compile(r"\s+")
INTEGER_REGEX = regex.compile(r"^[+-]?\d+$")


def yield_longest_match(input_data: str, symbols: Iterable[str]) -> Generator[str, None, None]:
    """Yield the separators and the chunks between them.

    The longest matching separator is preferred, so ".." wins over a single ".".

    Args:
        input_data (str): String to split.
        symbols (Iterable[str]): Known separators.

    Yields:
        str: Separators and the chunks between them, in order.
    """
    sorted_symbols: List[str] = sorted(symbols, key=len, reverse=True)
    rest = input_data
    current: str | None = None
    while rest:
        for symbol in sorted_symbols:
            if rest.startswith(symbol):
                if current is not None:
                    yield current
                yield symbol
                rest = rest.removeprefix(symbol)
                current = None
                break
        else:
            current, rest = f"{'' if current is None else current}{rest[:1]}", rest[1:]
    if current is not None:
        yield current


def tokenize(input_data: str) -> List[str]:
    return list(yield_longest_match(regex.sub(WHITESPACE_REGEX, "", input_data), SEPARATORS))


def _integer(chunk: str, text: str) -> int:
    if not INTEGER_REGEX.match(chunk):
        raise UsageError(f"expected an integer, got {chunk!r} in {text!r}")
    return int(chunk)


def parse_int_list(text: str) -> Tuple[int, ...]:
    """Parse "1,0,-1" into (1, 0, -1).

    Raises:
        UsageError: A chunk is not an integer or separators are misplaced.
    """
    tokens = tokenize(text)
    if not tokens:
        raise UsageError("expected a comma separated list of integers, got an empty string")
    values = tokens[::2]
    separators = tokens[1::2]
    if any(sep != LIST_SEPARATOR for sep in separators) or tokens[-1] in SEPARATORS:
        raise UsageError(f"malformed integer list {text!r}")
    return tuple(_integer(chunk, text) for chunk in values)


def parse_range(text: str) -> Tuple[int, int]:
    """Parse "-1..1" into (-1, 1); a single integer "a" is the range a..a.

    Raises:
        UsageError: The text is not a range or the range is empty.
    """
    tokens = tokenize(text)
    if len(tokens) == 1:
        value = _integer(tokens[0], text)
        return value, value
    if len(tokens) != 3 or tokens[1] != RANGE_SEPARATOR:
        raise UsageError(f"expected a range low..high, got {text!r}")
    low, high = _integer(tokens[0], text), _integer(tokens[2], text)
    if low > high:
        raise UsageError(f"empty range {text!r}")
    return low, high


def parse_window(entries: str, degrees: str | None = None) -> LabelWindow:
    """Entry range plus an optional range of admitted degrees Σ m_i."""
    low, high = parse_range(entries)
    if degrees is None:
        return LabelWindow(low=low, high=high)
    first, last = parse_range(degrees)
    return LabelWindow(low=low, high=high, degrees=tuple(range(first, last + 1)))


def parse_generators(text: str) -> List[GeneratorName]:
    """Parse "E0,F1,K1" into generator names."""
    tokens = tokenize(text)
    if not tokens or any(sep != LIST_SEPARATOR for sep in tokens[1::2]) or tokens[-1] in SEPARATORS:
        raise UsageError(f"malformed generator list {text!r}")
    return [GeneratorName.parse(chunk) for chunk in tokens[::2]]


__all__ = (
    "parse_generators",
    "parse_int_list",
    "parse_range",
    "parse_window",
    "tokenize",
    "yield_longest_match",
)
