import logging
import operator
from enum import Enum
from functools import lru_cache

from corequot.partition_core.partition import DomainError, Partition, is_t_core_bruteforce, require_modulus
from corequot.special_classes.classes import is_doubled_distinct, is_self_conjugate

logger = logging.getLogger(__name__)


class PartitionClass(Enum):
    ALL = "all"
    TCORE = "tcore"
    SELF_CONJUGATE = "sc"
    DOUBLED_DISTINCT = "dd"
    DISTINCT = "distinct"


def _require_size(n):
    try:
        n = operator.index(n)
    except TypeError:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}") from None
    if n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n}")
    return n


def _descending(n, largest, distinct):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first - 1 if distinct else first, distinct):
            yield (first,) + rest


def partitions(n):
    """Yields every partition of n, largest first part first (lexicographically decreasing)."""
    n = _require_size(n)
    for parts in _descending(n, n, distinct=False):
        yield Partition(parts)


def distinct_partitions(n):
    """Yields the partitions of n into distinct parts, lexicographically decreasing."""
    n = _require_size(n)
    for parts in _descending(n, n, distinct=True):
        yield Partition(parts)


class PartitionStream:
    """
    The partitions of n in one class, in lexicographically decreasing order.

    Each iteration starts a fresh generator, so two passes over the same stream
    yield identical sequences.
    """

    def __init__(self, n, partition_class=PartitionClass.ALL, t=None):
        self.n = _require_size(n)
        self.partition_class = PartitionClass(partition_class)
        if self.partition_class is PartitionClass.TCORE:
            if t is None:
                raise DomainError("The t-core class needs a modulus t")
            t = require_modulus(t)
        self.t = t

    def _accepts(self, lam):
        if self.partition_class is PartitionClass.TCORE:
            return is_t_core_bruteforce(lam, self.t)
        if self.partition_class is PartitionClass.SELF_CONJUGATE:
            return is_self_conjugate(lam)
        if self.partition_class is PartitionClass.DOUBLED_DISTINCT:
            return is_doubled_distinct(lam)
        return True

    def __iter__(self):
        if self.partition_class is PartitionClass.DISTINCT:
            return distinct_partitions(self.n)
        return (lam for lam in partitions(self.n) if self._accepts(lam))

    def count(self):
        return sum(1 for _ in self)


@lru_cache(maxsize=None)
def _partition_counts(n):
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for k in range(part, n + 1):
            counts[k] += counts[k - part]
    return tuple(counts)


def count_partitions(n):
    """p(n), by the coin-change recurrence over part sizes."""
    n = _require_size(n)
    return _partition_counts(n)[n]


@lru_cache(maxsize=None)
def count_distinct(n):
    n = _require_size(n)
    counts = [1] + [0] * n
    for part in range(1, n + 1):
        for k in range(n, part - 1, -1):
            counts[k] += counts[k - part]
    return counts[n]


@lru_cache(maxsize=None)
def count_t_cores(n, t):
    """c_t(n): the number of t-core partitions of n, by exhaustive filtering."""
    count = PartitionStream(n, PartitionClass.TCORE, t).count()
    logger.debug(f"c_{t}({n}) = {count}")
    return count


@lru_cache(maxsize=None)
def count_self_conjugate(n):
    return PartitionStream(n, PartitionClass.SELF_CONJUGATE).count()


@lru_cache(maxsize=None)
def count_doubled_distinct(n):
    return PartitionStream(n, PartitionClass.DOUBLED_DISTINCT).count()


def multipartitions(k, t):
    """Yields every t-tuple of partitions whose sizes add up to k."""
    k = _require_size(k)
    t = require_modulus(t)
    if t == 1:
        for lam in partitions(k):
            yield (lam,)
        return
    for first in range(k, -1, -1):
        for head in partitions(first):
            for rest in multipartitions(k - first, t - 1):
                yield (head,) + rest


@lru_cache(maxsize=None)
def count_multipartitions(k, t):
    """
    The number of t-tuples of partitions of total size k, the coefficient of
    q^k in (Σ p(n) qⁿ)^t.
    """
    k = _require_size(k)
    t = require_modulus(t)
    base = _partition_counts(k)
    result = [1] + [0] * k
    for _ in range(t):
        result = [sum(result[i] * base[m - i] for i in range(m + 1)) for m in range(k + 1)]
    return result[k]


def count_class(n, partition_class, t=None):
    """Dispatches to the cached counter of a partition class."""
    partition_class = PartitionClass(partition_class)
    if partition_class is PartitionClass.ALL:
        return count_partitions(n)
    if partition_class is PartitionClass.DISTINCT:
        return count_distinct(n)
    if partition_class is PartitionClass.TCORE:
        if t is None:
            raise DomainError("The t-core class needs a modulus t")
        return count_t_cores(n, require_modulus(t))
    if partition_class is PartitionClass.SELF_CONJUGATE:
        return count_self_conjugate(n)
    return count_doubled_distinct(n)
