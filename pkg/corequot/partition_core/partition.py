# corequot/partition_core/partition.py
import logging
import operator
import re
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

logger = logging.getLogger(__name__)

# ASCII digits only
PART_TOKEN = re.compile(r"[0-9]+")


class DomainError(ValueError):
    """Raised when an operation is called outside its mathematical domain."""
    pass


class ParseError(DomainError):
    """Raised when a text representation cannot be parsed."""
    pass


def require_modulus(t):
    """
    Validates a modulus t used for cores, quotients and colors.

    Returns:
        int: t as a plain integer.

    Raises:
        DomainError: If t is not a positive integer.
    """
    try:
        value = operator.index(t)
    except TypeError:
        raise DomainError(f"t must be a positive integer, got {t!r}") from None
    if value < 1:
        raise DomainError(f"t must be a positive integer, got {value}")
    return value


@dataclass(frozen=True)
class Partition:
    """
    An integer partition stored as a weakly decreasing tuple of positive parts.

    Trailing zeros are dropped on construction so that equal partitions compare
    equal regardless of how they were padded. Row and column indices in this
    package are 1-based.
    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            parts = [operator.index(p) for p in self.parts]
        except TypeError:
            raise DomainError(f"Partition parts must be integers, got {self.parts!r}") from None
        while parts and parts[-1] == 0:
            parts.pop()
        for k, p in enumerate(parts):
            if p <= 0:
                raise DomainError(f"Partition parts must be positive, got {tuple(parts)}")
            if k and p > parts[k - 1]:
                raise DomainError(f"Partition parts must be weakly decreasing, got {tuple(parts)}")
        object.__setattr__(self, "parts", tuple(parts))

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def part(self, i):
        """Returns λ_i (1-based), or 0 past the last part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __str__(self):
        return format_partition(self)


EMPTY = Partition(())


def parse_partition(text):
    """
    Parses the comma-separated partition format, e.g. "8,7,7,4,4,2" or "(3,1,1)".

    An empty string (or "()") denotes the empty partition. Parts may be given
    with surrounding whitespace and trailing zeros; both are normalized away.

    Raises:
        ParseError: If a token is not a nonnegative integer or the parts are
                    not weakly decreasing.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        return EMPTY
    parts = []
    for token in body.split(","):
        token = token.strip()
        if not PART_TOKEN.fullmatch(token):
            raise ParseError(f"Invalid partition part '{token}' in '{text}'")
        parts.append(int(token))
    try:
        return Partition(tuple(parts))
    except DomainError as e:
        raise ParseError(f"Invalid partition '{text}': {e}") from None


def format_partition(lam):
    return ",".join(str(p) for p in lam.parts)


def conjugate(lam):
    """Returns λ′, whose j-th part is the number of boxes in column j of λ."""
    if not lam.parts:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def durfee(lam):
    """Returns the side of the Durfee square: the largest s with λ_s ≥ s."""
    s = 0
    for i, p in enumerate(lam.parts, start=1):
        if p < i:
            break
        s = i
    return s


def hook_length(lam, i, j):
    """
    Returns h_{i,j}(λ) = λ_i − i + λ′_j − j + 1 for the box (i, j).

    Raises:
        DomainError: If (i, j) is not a box of the Young diagram of λ.
    """
    if i < 1 or j < 1 or j > lam.part(i):
        raise DomainError(f"Box ({i},{j}) is not in the diagram of ({lam})")
    column_length = sum(1 for p in lam.parts if p >= j)
    return lam.part(i) - i + column_length - j + 1


def _hook_rows(lam):
    conj = conjugate(lam)
    return [
        [lam.parts[i - 1] - i + conj.parts[j - 1] - j + 1 for j in range(1, lam.parts[i - 1] + 1)]
        for i in range(1, len(lam.parts) + 1)
    ]


def hook_matrix(lam):
    """Returns the hook lengths row by row, in the shape of the Young diagram."""
    return _hook_rows(lam)


def hook_multiset(lam):
    """Returns the multiset of all hook lengths of λ as a Counter."""
    return Counter(h for row in _hook_rows(lam) for h in row)


def is_t_core_bruteforce(lam, t):
    """Returns True iff no hook length of λ is divisible by t."""
    t = require_modulus(t)
    return all(h % t for row in _hook_rows(lam) for h in row)


def count_hooks_of_length(lam, t):
    """Returns the number of boxes of λ whose hook length is exactly t."""
    return sum(1 for row in _hook_rows(lam) for h in row if h == t)


def boxes_with_hook_length(lam, t):
    """Lists the boxes (i, j) with h_{i,j} = t, topmost first and then leftmost."""
    return [
        (i, j)
        for i, row in enumerate(_hook_rows(lam), start=1)
        for j, h in enumerate(row, start=1)
        if h == t
    ]


def remove_rim_hook(lam, i, j):
    """
    Removes the rim hook attached to the box (i, j).

    The rim hook runs along the border of the diagram from the last box of
    row i to the last box of column j, so it has h_{i,j} boxes. Rows i..ℓ−1
    (ℓ = λ′_j) become λ_{k+1} − 1 and row ℓ becomes j − 1.
    """
    hook_length(lam, i, j)
    parts = list(lam.parts)
    leg_end = sum(1 for p in parts if p >= j)
    for k in range(i, leg_end):
        parts[k - 1] = lam.parts[k] - 1
    parts[leg_end - 1] = j - 1
    return Partition(tuple(parts))


def strip_t_core(lam, t, rng=None):
    """
    Repeatedly removes rim hooks of length t until none remain.

    Without rng the rim hook of the topmost, then leftmost, box of hook
    length t is removed each round; with a random.Random the box is drawn
    uniformly from all boxes of hook length t. The result does not depend on
    the order.

    Args:
        lam (Partition): The partition to reduce.
        t (int): The hook length to strip.
        rng (random.Random, optional): Source of randomness for the removal order.

    Returns:
        Partition: The t-core of λ.
    """
    t = require_modulus(t)
    current = lam
    removed = 0
    while True:
        boxes = boxes_with_hook_length(current, t)
        if not boxes:
            break
        i, j = rng.choice(boxes) if rng is not None else boxes[0]
        current = remove_rim_hook(current, i, j)
        removed += 1
    logger.debug(f"Stripped {removed} rim hooks of length {t} from ({lam}) -> ({current})")
    return current


class HookCase(Enum):
    ARM_LEG = "arm-leg"
    ARM = "arm"
    LEG = "leg"


@dataclass(frozen=True)
class HookClassification:
    """
    A box of a Young diagram placed in the three-way case split around the
    Durfee square, with the exclusive range its hook length must fall in.

    For ARM_LEG boxes (both indices inside the Durfee square) the hook length is
    exactly a_i + b_j + 1 and lower/upper are None.
    """
    box: Tuple[int, int]
    case: HookCase
    length: int
    lower: Optional[int] = None
    upper: Optional[int] = None


def _frobenius_rows(lam):
    s = durfee(lam)
    conj = conjugate(lam)
    top = [lam.parts[k - 1] - k for k in range(1, s + 1)]
    bottom = [conj.parts[k - 1] - k for k in range(1, s + 1)]
    return s, top, bottom


def classify_hook(lam, i, j):
    """
    Classifies the box (i, j) as Arm-Leg (i, j ≤ s), Arm (i ≤ s < j) or
    Leg (j ≤ s < i), s being the Durfee side.

    For Arm boxes, with ℓ = λ′_j and a_{s+1} = −1, the hook length satisfies
    a_i − a_ℓ < h < a_i − a_{ℓ+1}; Leg boxes satisfy the same with b and ℓ = λ_i.
    """
    length = hook_length(lam, i, j)
    s, top, bottom = _frobenius_rows(lam)
    top = top + [-1]
    bottom = bottom + [-1]
    if i <= s and j <= s:
        return HookClassification((i, j), HookCase.ARM_LEG, length)
    if i <= s:
        ell = sum(1 for p in lam.parts if p >= j)
        return HookClassification((i, j), HookCase.ARM, length,
                                  top[i - 1] - top[ell - 1], top[i - 1] - top[ell])
    ell = lam.part(i)
    return HookClassification((i, j), HookCase.LEG, length,
                              bottom[j - 1] - bottom[ell - 1], bottom[j - 1] - bottom[ell])


def classify_hooks(lam):
    return [
        classify_hook(lam, i, j)
        for i in range(1, len(lam.parts) + 1)
        for j in range(1, lam.parts[i - 1] + 1)
    ]
