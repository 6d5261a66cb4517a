# corequot/special_classes/classes.py
import logging
import operator
from dataclasses import dataclass, field
from typing import Dict, Tuple

from corequot.frobenius.symbols import FrobeniusSymbol, from_frobenius, to_colored, to_frobenius
from corequot.littlewood.decomposition import decompose
from corequot.partition_core.partition import DomainError, Partition, conjugate, require_modulus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DistinctPartition:
    """A partition into distinct parts, the δ underlying a doubled distinct partition δδ."""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        try:
            parts = tuple(operator.index(p) for p in self.parts)
        except TypeError:
            raise DomainError(f"Parts must be integers, got {self.parts!r}") from None
        if any(p < 1 for p in parts) or any(parts[k] <= parts[k + 1] for k in range(len(parts) - 1)):
            raise DomainError(f"Parts must be distinct, positive and decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self):
        return sum(self.parts)


def is_self_conjugate(lam):
    result = lam == conjugate(lam)
    symbol = to_frobenius(lam)
    assert result == (symbol.top == symbol.bottom)
    return result


def double_distinct(delta):
    """
    Returns δδ, the partition with Frobenius symbol (δ_1 … δ_s / δ_1 − 1 … δ_s − 1).

    Raises:
        DomainError: If δ does not have distinct positive parts.
    """
    if not isinstance(delta, DistinctPartition):
        delta = DistinctPartition(tuple(delta))
    symbol = FrobeniusSymbol(delta.parts, tuple(p - 1 for p in delta.parts))
    lam = from_frobenius(symbol)
    assert lam.size == 2 * delta.size
    return lam


def is_doubled_distinct(lam):
    symbol = to_frobenius(lam)
    return symbol.bottom == tuple(a - 1 for a in symbol.top)


@dataclass
class ClassReport:
    """Outcome of checking one proposition on one partition, clause by clause."""
    input: Partition
    t: int
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def failed_checks(self):
        return [name for name, ok in self.checks.items() if not ok]

    def to_payload(self):
        return {
            "input": list(self.input.parts),
            "t": self.t,
            "checks": dict(self.checks),
            "pass": self.passed,
        }


def verify_sc_decomposition(lam, t):
    """
    Checks that a self-conjugate λ has a self-conjugate t-core and that
    λ_(j)′ = λ_(t−j−1) for every j.

    Raises:
        DomainError: If λ is not self-conjugate.
    """
    t = require_modulus(t)
    if not is_self_conjugate(lam):
        raise DomainError(f"({lam}) is not self-conjugate")
    decomposition = decompose(lam, t)
    report = ClassReport(lam, t)
    report.checks["core_self_conjugate"] = is_self_conjugate(decomposition.core)
    quotient = decomposition.quotient
    for j in range(t):
        report.checks[f"conjugate_quotient_{j}"] = conjugate(quotient[j]) == quotient[t - j - 1]
    if not report.passed:
        logger.info(f"Self-conjugate check failed for ({lam}), t={t}: {report.failed_checks()}")
    return report


def _column_rule_holds(lam, t):
    """
    Each column of 𝔉(μ) with top value t·q + r is colored (q_r / q_{t−r}) when
    r ≥ 1 and (q_0 / (q − 1)_0) when r = 0.
    """
    colored = to_colored(to_frobenius(lam), t)
    for top, bottom in zip(colored.top, colored.bottom):
        q, r = top.value, top.color
        if r == 0:
            assert q >= 1, f"column with top value 0 in doubled distinct ({lam})"
            expected = (q - 1, 0)
        else:
            expected = (q, t - r)
        if (bottom.value, bottom.color) != expected:
            return False
    return True


def verify_dd_decomposition(mu, t):
    """
    Checks that a doubled distinct μ has a doubled distinct t-core and
    μ_(0), and that μ_(j)′ = μ_(t−j) for j = 1..t−1.

    Raises:
        DomainError: If μ is not doubled distinct.
    """
    t = require_modulus(t)
    if not is_doubled_distinct(mu):
        raise DomainError(f"({mu}) is not doubled distinct")
    decomposition = decompose(mu, t)
    report = ClassReport(mu, t)
    report.checks["core_doubled_distinct"] = is_doubled_distinct(decomposition.core)
    quotient = decomposition.quotient
    report.checks["quotient_0_doubled_distinct"] = is_doubled_distinct(quotient[0])
    for j in range(1, t):
        report.checks[f"conjugate_quotient_{j}"] = conjugate(quotient[j]) == quotient[t - j]
    report.checks["column_rule"] = _column_rule_holds(mu, t)
    if not report.passed:
        logger.info(f"Doubled distinct check failed for ({mu}), t={t}: {report.failed_checks()}")
    return report
