# corequot/wright/wright_map.py
import logging
import operator
from dataclasses import dataclass
from typing import Tuple

from corequot.frobenius.symbols import parse_rows
from corequot.partition_core.partition import DomainError, ParseError, Partition, conjugate

logger = logging.getLogger(__name__)


def _strictly_decreasing(values):
    return all(values[k] > values[k + 1] for k in range(len(values) - 1))


@dataclass(frozen=True)
class TwoRowedArray:
    """
    Two strictly decreasing rows of nonnegative integers whose lengths u and v
    need not agree. Either row may be empty.
    """
    top: Tuple[int, ...] = ()
    bottom: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            top = tuple(operator.index(a) for a in self.top)
            bottom = tuple(operator.index(b) for b in self.bottom)
        except TypeError:
            raise DomainError(f"Array entries must be integers, got {self.top!r} / {self.bottom!r}") from None
        for row in (top, bottom):
            if any(x < 0 for x in row) or not _strictly_decreasing(row):
                raise DomainError(f"Array rows must be strictly decreasing and nonnegative, got {top} / {bottom}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def u(self):
        return len(self.top)

    @property
    def v(self):
        return len(self.bottom)

    def __str__(self):
        return format_array(self)


def staircase_weight(d):
    """|Δ(d)|: d(d+1)/2 for d ≥ 0 and (−d)(−d−1)/2 for d < 0."""
    return d * (d + 1) // 2 if d >= 0 else (-d) * (-d - 1) // 2


def staircase(d):
    """The staircase partition with offset d, e.g. 3 -> (3,2,1) and -3 -> (2,1)."""
    top = d if d >= 0 else -d - 1
    return Partition(tuple(range(top, 0, -1)))


@dataclass(frozen=True)
class WrightImage:
    offset: int
    mu: Partition

    @property
    def staircase_weight(self):
        return staircase_weight(self.offset)

    @property
    def weight(self):
        return self.staircase_weight + self.mu.size


def array_weight(array):
    """Total dot count Σtop + Σbottom + u of the array's dot diagram."""
    return sum(array.top) + sum(array.bottom) + array.u


def wright_forward(array):
    """
    Maps a two-rowed array to (d, μ).

    With d = u − v, the first u parts of μ are a_i + i − d and the remaining
    parts are the conjugate of ν = (b_j − v + j), zero parts allowed in ν.

    Raises:
        DomainError: If the argument is not a TwoRowedArray.
    """
    if not isinstance(array, TwoRowedArray):
        raise DomainError(f"Expected a TwoRowedArray, got {array!r}")
    u, v = array.u, array.v
    d = u - v
    head = [a + i - d for i, a in enumerate(array.top, start=1)]
    # trailing zero parts of ν drop out here
    nu = Partition(tuple(b - v + j for j, b in enumerate(array.bottom, start=1)))
    mu = Partition(tuple(head) + conjugate(nu).parts)
    assert staircase_weight(d) + mu.size == array_weight(array)
    return WrightImage(d, mu)


def wright_backward(d, mu):
    """
    Inverts wright_forward.

    μ is padded with zeros; u counts the initial run of indices with
    μ_i + d − i ≥ 0, v = u − d, a_i = μ_i + d − i, and b_j = ν_j + v − j with
    ν the conjugate of the parts of μ past u, padded to v parts.

    Args:
        d (int): The staircase offset u − v.
        mu (Partition): The partition part of the image.

    Returns:
        TwoRowedArray: The unique array mapping to (d, μ).
    """
    d = operator.index(d)
    u = 0
    while mu.part(u + 1) + d - (u + 1) >= 0:
        u += 1
    v = u - d
    top = tuple(mu.part(i) + d - i for i in range(1, u + 1))
    nu = conjugate(Partition(mu.parts[u:]))
    assert v >= nu.length, f"tail of μ does not fit in {v} columns"
    bottom = tuple(nu.part(j) + v - j for j in range(1, v + 1))
    assert _strictly_decreasing(top) and all(a >= 0 for a in top)
    assert _strictly_decreasing(bottom) and all(b >= 0 for b in bottom)
    array = TwoRowedArray(top, bottom)
    logger.debug(f"wright_backward({d}, ({mu})) -> {array}")
    return array


def format_array(array):
    top = " ".join(str(a) for a in array.top) or "-"
    bottom = " ".join(str(b) for b in array.bottom) or "-"
    return f"{top} / {bottom}"


def parse_array(text):
    """Parses "a1 a2 … / b1 b2 …", an empty side written "-"."""
    top, bottom = parse_rows(text)
    try:
        return TwoRowedArray(top, bottom)
    except DomainError as e:
        raise ParseError(f"Invalid two-rowed array '{text}': {e}") from None


def array_payload(array):
    return {"top": list(array.top), "bottom": list(array.bottom)}
