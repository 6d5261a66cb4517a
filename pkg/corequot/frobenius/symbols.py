# corequot/frobenius/symbols.py
import logging
import operator
from dataclasses import dataclass
from functools import total_ordering
from typing import Tuple

from corequot.partition_core.partition import (
    DomainError,
    PART_TOKEN,
    ParseError,
    Partition,
    conjugate,
    durfee,
    require_modulus,
)

logger = logging.getLogger(__name__)


def _strictly_decreasing(values):
    return all(values[k] > values[k + 1] for k in range(len(values) - 1))


@dataclass(frozen=True)
class FrobeniusSymbol:
    """
    A Frobenius symbol (a_1 … a_s / b_1 … b_s): two equal-length rows of
    strictly decreasing nonnegative integers.
    """
    top: Tuple[int, ...] = ()
    bottom: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            top = tuple(operator.index(a) for a in self.top)
            bottom = tuple(operator.index(b) for b in self.bottom)
        except TypeError:
            raise DomainError(f"Frobenius entries must be integers, got {self.top!r} / {self.bottom!r}") from None
        if len(top) != len(bottom):
            raise DomainError(f"Frobenius rows must have equal length, got {len(top)} and {len(bottom)}")
        for row in (top, bottom):
            if any(x < 0 for x in row) or not _strictly_decreasing(row):
                raise DomainError(f"Frobenius rows must be strictly decreasing and nonnegative, got {top} / {bottom}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def columns(self):
        return len(self.top)

    @property
    def weight(self):
        return sum(self.top) + sum(self.bottom) + len(self.top)

    def __str__(self):
        return format_frobenius(self)


def to_frobenius(lam):
    """Returns 𝔉(λ) = (λ_1 − 1, …, λ_s − s / λ′_1 − 1, …, λ′_s − s), s the Durfee side."""
    s = durfee(lam)
    conj = conjugate(lam)
    return FrobeniusSymbol(
        tuple(lam.parts[i - 1] - i for i in range(1, s + 1)),
        tuple(conj.parts[i - 1] - i for i in range(1, s + 1)),
    )


def from_frobenius(symbol):
    """
    Rebuilds the partition of a Frobenius symbol.

    Rows 1..s are a_i + i. Below the Durfee square, row k counts the columns
    j ≤ s whose length b_j + j reaches k.
    """
    if not isinstance(symbol, FrobeniusSymbol):
        raise DomainError(f"Expected a FrobeniusSymbol, got {symbol!r}")
    s = symbol.columns
    if s == 0:
        return Partition(())
    rows = [a + i for i, a in enumerate(symbol.top, start=1)]
    column_lengths = [b + j for j, b in enumerate(symbol.bottom, start=1)]
    for k in range(s + 1, column_lengths[0] + 1):
        rows.append(sum(1 for length in column_lengths if length >= k))
    lam = Partition(tuple(rows))
    assert lam.size == symbol.weight
    return lam


@total_ordering
@dataclass(frozen=True)
class ColoredInteger:
    """
    The integer `value` carrying color `color` in {0, …, modulus − 1}.

    Colored integers are totally ordered: k_i < m_j iff k < m, or k = m and i < j.
    """
    value: int
    color: int
    modulus: int

    def __post_init__(self):
        require_modulus(self.modulus)
        if self.value < 0:
            raise DomainError(f"Colored integer value must be nonnegative, got {self.value}")
        if not 0 <= self.color < self.modulus:
            raise DomainError(f"Color must lie in 0..{self.modulus - 1}, got {self.color}")

    def __lt__(self, other):
        if not isinstance(other, ColoredInteger):
            return NotImplemented
        return colored_less(self, other)

    def __str__(self):
        return f"{self.value}:{self.color}"


def colored_less(x, y):
    """
    Strict total order on colored integers of the same modulus.

    Raises:
        DomainError: If the two moduli differ.
    """
    if x.modulus != y.modulus:
        raise DomainError(f"Cannot compare colored integers of moduli {x.modulus} and {y.modulus}")
    return (x.value, x.color) < (y.value, y.color)


def decode_top(entry):
    """Top-row entry q_r stands for a = t·q + r."""
    return entry.modulus * entry.value + entry.color


def decode_bottom(entry):
    """Bottom-row entry q′_r′ stands for b = t·q′ + (t − r′ − 1)."""
    return entry.modulus * entry.value + (entry.modulus - entry.color - 1)


def encode_top(a, t):
    q, r = divmod(a, t)
    return ColoredInteger(q, r, t)


def encode_bottom(b, t):
    q, rest = divmod(b, t)
    return ColoredInteger(q, t - 1 - rest, t)


@dataclass(frozen=True)
class ColoredFrobeniusSymbol:
    """
    The t-colored Frobenius symbol ℭ𝔉ₜ of a Frobenius symbol.

    Columns stay aligned with the source symbol: column i encodes (a_i, b_i).
    Because of the (t − r′ − 1) in the bottom decoding, a bottom row aligned this
    way is not decreasing in the colored order when two entries share a value;
    display_bottom() gives the colored-order view.
    """
    top: Tuple[ColoredInteger, ...]
    bottom: Tuple[ColoredInteger, ...]
    modulus: int

    def __post_init__(self):
        t = require_modulus(self.modulus)
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        if len(top) != len(bottom):
            raise DomainError(f"Colored rows must have equal length, got {len(top)} and {len(bottom)}")
        if any(c.modulus != t for c in top + bottom):
            raise DomainError(f"All colored entries must have modulus {t}")
        if not _strictly_decreasing([decode_top(c) for c in top]):
            raise DomainError("Decoded top row must be strictly decreasing")
        if not _strictly_decreasing([decode_bottom(c) for c in bottom]):
            raise DomainError("Decoded bottom row must be strictly decreasing")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def columns(self):
        return len(self.top)

    def display_bottom(self):
        """The bottom row sorted in decreasing colored order."""
        return tuple(sorted(self.bottom, reverse=True))

    def __str__(self):
        return format_colored(self)


def to_colored(symbol, t):
    """Re-encodes each column (a_i, b_i) as (q_i with color r_i / q′_i with color r′_i)."""
    t = require_modulus(t)
    return ColoredFrobeniusSymbol(
        tuple(encode_top(a, t) for a in symbol.top),
        tuple(encode_bottom(b, t) for b in symbol.bottom),
        t,
    )


def from_colored(colored):
    if not isinstance(colored, ColoredFrobeniusSymbol):
        raise DomainError(f"Expected a ColoredFrobeniusSymbol, got {colored!r}")
    return FrobeniusSymbol(
        tuple(decode_top(c) for c in colored.top),
        tuple(decode_bottom(c) for c in colored.bottom),
    )


def is_t_core_frobenius(symbol, t):
    """
    Checks the Frobenius characterization of t-cores:
    (1) a_i + b_j + 1 ≢ 0 (mod t) for all i, j;
    (2) a_i ≥ t implies a_i − t is in the top row;
    (3) b_j ≥ t implies b_j − t is in the bottom row.
    """
    t = require_modulus(t)
    top, bottom = set(symbol.top), set(symbol.bottom)
    if any((a + b + 1) % t == 0 for a in symbol.top for b in symbol.bottom):
        return False
    if any(a >= t and a - t not in top for a in symbol.top):
        return False
    return all(b < t or b - t in bottom for b in symbol.bottom)


def _row_colors(row):
    by_color = {}
    for entry in row:
        by_color.setdefault(entry.color, set()).add(entry.value)
    return by_color


def is_t_core_kolitsch(colored):
    """
    Checks the colored characterization of t-cores: no color occurs in both
    rows, and within a row the values of each color are exactly {m − 1, …, 1, 0}.
    """
    top, bottom = _row_colors(colored.top), _row_colors(colored.bottom)
    if top.keys() & bottom.keys():
        return False
    for by_color in (top, bottom):
        for values in by_color.values():
            if values != set(range(len(values))):
                return False
    return True


def _colored_rows(total, length, t, below=None):
    """
    Yields rows of `length` colored integers, strictly decreasing in the
    colored order and all smaller than `below`, whose values sum to `total`.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    top_value = total if below is None else min(total, below.value)
    for value in range(top_value, -1, -1):
        if total - value > (length - 1) * value:
            break
        for color in range(t - 1, -1, -1):
            head = ColoredInteger(value, color, t)
            if below is not None and not head < below:
                continue
            for tail in _colored_rows(total - value, length - 1, t, head):
                yield (head,) + tail


def colored_frobenius_arrays(n, t):
    """
    Yields every t-colored Frobenius partition of n as a (top, bottom) pair of
    rows; each row is strictly decreasing in the colored order and the values
    plus the number of columns add up to n.
    """
    t = require_modulus(t)
    for s in range(0, n + 1):
        bottoms = {}
        for top_total in range(0, n - s + 1):
            bottom_total = n - s - top_total
            if bottom_total not in bottoms:
                bottoms[bottom_total] = list(_colored_rows(bottom_total, s, t))
            if not bottoms[bottom_total]:
                continue
            for top in _colored_rows(top_total, s, t):
                for bottom in bottoms[bottom_total]:
                    yield top, bottom


def count_colored_frobenius(n, t):
    count = sum(1 for _ in colored_frobenius_arrays(n, t))
    logger.debug(f"{count} {t}-colored Frobenius partitions of {n}")
    return count


def _format_row(row):
    return " ".join(str(x) for x in row) if row else "-"


def format_frobenius(symbol):
    return f"{_format_row(symbol.top)} / {_format_row(symbol.bottom)}"


def format_colored(colored):
    return f"{_format_row(colored.top)} / {_format_row(colored.bottom)}"


def parse_rows(text):
    """
    Parses the two-row text format "a1 a2 … / b1 b2 …"; a side written "-" (or
    left blank) is empty.

    Returns:
        tuple: The two rows as tuples of ints.

    Raises:
        ParseError: If the slash is missing or a token is not a nonnegative integer.
    """
    if text.count("/") != 1:
        raise ParseError(f"Expected exactly one '/' separating the two rows in '{text}'")
    rows = []
    for side in text.split("/"):
        tokens = side.split()
        if tokens == ["-"]:
            tokens = []
        row = []
        for token in tokens:
            if not PART_TOKEN.fullmatch(token):
                raise ParseError(f"Invalid entry '{token}' in '{text}'")
            row.append(int(token))
        rows.append(tuple(row))
    return rows[0], rows[1]


def parse_frobenius(text):
    top, bottom = parse_rows(text)
    try:
        return FrobeniusSymbol(top, bottom)
    except DomainError as e:
        raise ParseError(f"Invalid Frobenius symbol '{text}': {e}") from None


def frobenius_payload(symbol):
    return {"top": list(symbol.top), "bottom": list(symbol.bottom)}


def colored_payload(colored):
    return {
        "t": colored.modulus,
        "top": [[c.value, c.color] for c in colored.top],
        "bottom": [[c.value, c.color] for c in colored.bottom],
    }
