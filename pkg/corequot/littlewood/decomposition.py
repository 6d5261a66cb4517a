# corequot/littlewood/decomposition.py
import logging
import operator
from dataclasses import dataclass
from typing import Tuple

from corequot.frobenius.symbols import (
    FrobeniusSymbol,
    from_frobenius,
    is_t_core_frobenius,
    to_colored,
    to_frobenius,
)
from corequot.partition_core.partition import (
    DomainError,
    Partition,
    count_hooks_of_length,
    require_modulus,
)
from corequot.wright.wright_map import TwoRowedArray, wright_backward, wright_forward

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decomposition:
    """
    The image of a partition under the Littlewood decomposition: its t-core,
    t-quotient (λ_(0), …, λ_(t−1)) and characteristic vector (w_0, …, w_{t−1}).
    """
    core: Partition
    quotient: Tuple[Partition, ...]
    charvec: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        t = require_modulus(self.modulus)
        quotient = tuple(self.quotient)
        charvec = tuple(operator.index(w) for w in self.charvec)
        if len(quotient) != t or len(charvec) != t:
            raise DomainError(f"Quotient and characteristic vector must have {t} entries, "
                              f"got {len(quotient)} and {len(charvec)}")
        if sum(charvec) != 0:
            raise DomainError(f"Characteristic vector must sum to 0, got {charvec}")
        object.__setattr__(self, "quotient", quotient)
        object.__setattr__(self, "charvec", charvec)

    @property
    def size(self):
        """|core| + t·Σ|λ_(j)|, the size of the decomposed partition."""
        return self.core.size + self.modulus * sum(q.size for q in self.quotient)

    def to_payload(self):
        return {
            "t": self.modulus,
            "core": list(self.core.parts),
            "quotient": [list(q.parts) for q in self.quotient],
            "charvec": list(self.charvec),
        }

    @classmethod
    def from_payload(cls, payload):
        """
        Builds a Decomposition from the JSON payload
        {"t": int, "core": [...], "quotient": [[...], ...], "charvec": [...]}.

        A missing "charvec" is recovered from the core.

        Raises:
            DomainError: If a key is missing or the values are inconsistent.
        """
        try:
            t = require_modulus(payload["t"])
            core = Partition(tuple(payload["core"]))
            quotient = tuple(Partition(tuple(q)) for q in payload["quotient"])
        except (KeyError, TypeError) as e:
            raise DomainError(f"Malformed decomposition payload: {e!r}") from None
        charvec = payload.get("charvec")
        if charvec is None:
            charvec = charvec_from_core(core, t)
        decomposition = cls(core, quotient, tuple(charvec), t)
        if tuple(decomposition.charvec) != charvec_from_core(core, t):
            raise DomainError(f"Characteristic vector {decomposition.charvec} does not match core ({core})")
        return decomposition


def split_by_color(colored):
    """
    Splits ℭ𝔉ₜ into t two-rowed arrays: array j holds the values of the
    color-j entries of each row, in decreasing order.
    """
    t = colored.modulus
    return tuple(
        TwoRowedArray(
            tuple(c.value for c in colored.top if c.color == j),
            tuple(c.value for c in colored.bottom if c.color == j),
        )
        for j in range(t)
    )


def char_vector(lam, t):
    """Returns (u_j − v_j) for j = 0..t−1, counting color-j entries per row of ℭ𝔉ₜ(λ)."""
    t = require_modulus(t)
    colored = to_colored(to_frobenius(lam), t)
    counts = [0] * t
    for c in colored.top:
        counts[c.color] += 1
    for c in colored.bottom:
        counts[c.color] -= 1
    assert sum(counts) == 0
    return tuple(counts)


def core_from_charvec(charvec, t):
    """
    Builds the t-core with characteristic vector w.

    For w_j > 0 the top row gets (w_j − 1)_j, …, 1_j, 0_j; for w_j < 0 the
    bottom row gets (−w_j − 1)_j, …, 0_j. Rows are sorted by decoded value.

    Raises:
        DomainError: If w does not have t entries summing to 0.
    """
    t = require_modulus(t)
    charvec = tuple(operator.index(w) for w in charvec)
    if len(charvec) != t or sum(charvec) != 0:
        raise DomainError(f"Expected {t} integers summing to 0, got {charvec}")
    top = sorted((t * k + j for j, w in enumerate(charvec) for k in range(w)), reverse=True)
    bottom = sorted((t * k + (t - j - 1) for j, w in enumerate(charvec) for k in range(-w)), reverse=True)
    return from_frobenius(FrobeniusSymbol(tuple(top), tuple(bottom)))


def charvec_from_core(core, t):
    """
    Recovers the characteristic vector of a t-core.

    Raises:
        DomainError: If core is not a t-core.
    """
    t = require_modulus(t)
    if not is_t_core_frobenius(to_frobenius(core), t):
        raise DomainError(f"({core}) is not a {t}-core")
    return char_vector(core, t)


def decompose(lam, t):
    """
    Computes the Littlewood decomposition of λ.

    ℭ𝔉ₜ(λ) is split by color; Wright's map sends array j to (w_j, λ_(j)), and
    the core is the t-core with characteristic vector (w_0, …, w_{t−1}).

    Args:
        lam (Partition): The partition to decompose.
        t (int): The modulus.

    Returns:
        Decomposition: Core, quotient and characteristic vector of λ.

    Raises:
        DomainError: If t is not a positive integer.
    """
    t = require_modulus(t)
    arrays = split_by_color(to_colored(to_frobenius(lam), t))
    images = [wright_forward(array) for array in arrays]
    charvec = tuple(image.offset for image in images)  # sums to zero
    core = core_from_charvec(charvec, t)
    decomposition = Decomposition(core, tuple(image.mu for image in images), charvec, t)
    assert decomposition.size == lam.size, f"size identity fails for ({lam}), t={t}"
    assert charvec_from_core(core, t) == charvec
    logger.debug(f"decompose(({lam}), {t}) -> core ({core}), charvec {charvec}")
    return decomposition


def compose(core, quotient, t):
    """
    Inverts decompose.

    Args:
        core (Partition): A t-core.
        quotient (sequence of Partition): Exactly t partitions.
        t (int): The modulus.

    Returns:
        Partition: The partition whose t-core and t-quotient are the inputs.

    Raises:
        DomainError: If core is not a t-core or the quotient does not have t entries.
    """
    t = require_modulus(t)
    quotient = tuple(quotient)
    if len(quotient) != t:
        raise DomainError(f"Quotient must have {t} entries, got {len(quotient)}")
    charvec = charvec_from_core(core, t)
    top, bottom = [], []
    for j, (w, part) in enumerate(zip(charvec, quotient)):
        array = wright_backward(w, part)
        top.extend(t * a + j for a in array.top)
        bottom.extend(t * b + (t - j - 1) for b in array.bottom)
    assert len(top) == len(bottom)
    symbol = FrobeniusSymbol(tuple(sorted(top, reverse=True)), tuple(sorted(bottom, reverse=True)))
    return from_frobenius(symbol)


def quotient_hook1_count(decomposition):
    """Number of hooks of length 1 across the t-quotient."""
    return sum(count_hooks_of_length(q, 1) for q in decomposition.quotient)
