# corequot/qseries/identities.py
import logging
from dataclasses import dataclass, field
from math import isqrt
from typing import Dict, List, Optional

from corequot.enumeration.generator import (
    count_doubled_distinct,
    count_self_conjugate,
    count_t_cores,
    partitions,
)
from corequot.partition_core.partition import DomainError, require_modulus
from corequot.qseries.series import (
    LaurentBlock,
    QSeries,
    jtp_exponents,
    partition_gf,
    pochhammer_factor,
    required_window,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoefficientMismatch:
    left: str
    right: str
    index: int
    expected: int
    actual: int

    def __str__(self):
        return f"q^{self.index}: {self.left} has {self.expected}, {self.right} has {self.actual}"


@dataclass
class IdentityReport:
    """
    Result of checking one generating-function identity to a truncation order.

    `sides` keeps every series that took part, keyed by label, in the order they
    were compared; `mismatch` is the first differing coefficient found, if any.
    """
    name: str
    order: int
    t: Optional[int] = None
    sides: Dict[str, QSeries] = field(default_factory=dict)
    comparisons: List[tuple] = field(default_factory=list)
    mismatch: Optional[CoefficientMismatch] = None

    @property
    def passed(self):
        return self.mismatch is None

    def compare(self, left_label, left, right_label, right):
        self.sides.setdefault(left_label, left)
        self.sides.setdefault(right_label, right)
        self.comparisons.append((left_label, right_label))
        index = left.first_mismatch(right)
        if index is not None and self.mismatch is None:
            self.mismatch = CoefficientMismatch(left_label, right_label, index, left[index], right[index])
            logger.info(f"{self.name} (t={self.t}) fails at {self.mismatch}")

    def to_payload(self):
        return {
            "identity": self.name,
            "t": self.t,
            "order": self.order,
            "pass": self.passed,
            "comparisons": [list(pair) for pair in self.comparisons],
            "mismatch": None if self.mismatch is None else {
                "left": self.mismatch.left,
                "right": self.mismatch.right,
                "index": self.mismatch.index,
                "expected": self.mismatch.expected,
                "actual": self.mismatch.actual,
            },
        }


def enumerated_partition_numbers(order):
    """p(0), ..., p(order) counted off the partition stream, not from a product."""
    return QSeries([sum(1 for _ in partitions(n)) for n in range(order + 1)], order)


def lattice_theta_sum(quadratic, linears, order, zero_sum=False):
    """
    Σ q^{Σ_j quadratic·m_j(m_j−1)/2 + linears_j·m_j} over integer vectors m,
    optionally restricted to Σ m_j = 0, truncated at order.

    Every coordinate term is nonnegative when 1 ≤ linears_j ≤ quadratic, so
    partial exponents past the order are pruned. Coordinates are bounded by
    |m| ≤ ⌈√(2·order/quadratic)⌉ + 2, where each term already exceeds the order.
    """
    linears = list(linears)
    assert all(1 <= c <= quadratic for c in linears), f"linear weights {linears} out of range"

    def term(c, m):
        return quadratic * m * (m - 1) // 2 + c * m

    bound = isqrt(2 * order // quadratic) + 1 + 2
    assert all(term(c, bound) > order and term(c, -bound) > order for c in linears)

    coeffs = [0] * (order + 1)
    free = linears[:-1] if zero_sum and linears else linears

    def walk(index, exponent, total):
        if index == len(free):
            if zero_sum and linears:
                m = -total
                if abs(m) >= bound:
                    return
                exponent += term(linears[-1], m)
            if exponent <= order:
                coeffs[exponent] += 1
            return
        for m in range(-bound + 1, bound):
            e = exponent + term(free[index], m)
            if e <= order:
                walk(index + 1, e, total + m)

    walk(0, 0, 0)
    return QSeries(coeffs, order)


def theta_sum_tcore(t, order):
    """Σ over (m_1, …, m_t) with Σm_j = 0 of q^{t·Σ m_j(m_j−1)/2 + Σ j·m_j}."""
    t = require_modulus(t)
    return lattice_theta_sum(t, range(1, t + 1), order, zero_sum=True)


def _dissected_factors(t, order):
    """Factors of ∏_{j=1..t} (−zq^j;q^t)_∞(−q^{t−j}/z;q^t)_∞ as (z_power, sign, exponent)."""
    factors = []
    for j in range(1, t + 1):
        factors.extend((1, 1, e) for e in range(j, order + 1, t))
        factors.extend((-1, 1, e) for e in range(t - j, order + 1, t))
    return factors


def _exponents(factors):
    plus = [e for z, _, e in factors if z > 0]
    minus = [e for z, _, e in factors if z < 0]
    return plus, minus


def constant_term_partition_gf(t, order, window=None, margin=1):
    """The z⁰ row of the t-dissected Laurent product, which equals 1/(q;q)_∞."""
    t = require_modulus(t)
    factors = _dissected_factors(t, order)
    if window is None:
        window = required_window(*_exponents(factors), order) + margin
    block = LaurentBlock.product(factors, window, order)
    if block.usable_window() < 0:
        raise DomainError(f"z-window {window} is too small for order {order}")
    return block.constant_term()


def verify_constant_term(t, order, margin=1):
    t = require_modulus(t)
    report = IdentityReport("constant-term", order, t)
    window = required_window(*_exponents(_dissected_factors(t, order)), order) + margin
    constant = constant_term_partition_gf(t, order, window)
    report.compare("[z^0] dissected product", constant, "1/(q;q)", partition_gf(order))
    report.compare("[z^0] dissected product", constant,
                   f"[z^0] on window {window + 2}", constant_term_partition_gf(t, order, window + 2))
    report.compare("[z^0] dissected product", constant, "p(n)",
                   enumerated_partition_numbers(order))
    return report


def jacobi_triple_product_check(order, window=None, rows=4, margin=1):
    """
    Compares each exact z-row m of (−zq;q)_∞(−1/z;q)_∞ with q^{m(m+1)/2}/(q;q)_∞.

    Args:
        order (int): Truncation order N.
        window (int, optional): z-window M; by default the smallest window whose
                                exact rows reach |m| ≤ rows, plus margin.
        rows (int): Rows wanted when the window is chosen automatically.
        margin (int): Extra window beyond the soundness bound.

    Raises:
        DomainError: If the given window does not even make the z⁰ row exact.
    """
    plus, minus = jtp_exponents(order)
    if window is None:
        window = required_window(plus, minus, order, rows) + margin
    factors = [(1, 1, e) for e in plus] + [(-1, 1, e) for e in minus]
    block = LaurentBlock.product(factors, window, order)
    usable = block.usable_window()
    if usable < 0:
        raise DomainError(f"z-window {window} is below the soundness bound for order {order}")
    report = IdentityReport("jtp", order)
    base = partition_gf(order)
    for m in range(-usable, usable + 1):
        report.compare(f"[z^{m}] product", block.row(m), f"q^{m * (m + 1) // 2}/(q;q)", base.shift(m * (m + 1) // 2))
    logger.debug(f"jtp checked rows |m| <= {usable} on window {window}")
    return report


def verify_frobenius_gf(order, margin=1):
    """[z⁰](−zq;q)_∞(−1/z;q)_∞ against 1/(q;q)_∞ and against p(n) by enumeration."""
    plus, minus = jtp_exponents(order)
    window = required_window(plus, minus, order) + margin
    factors = [(1, 1, e) for e in plus] + [(-1, 1, e) for e in minus]
    constant = LaurentBlock.product(factors, window, order).constant_term()
    report = IdentityReport("frobenius-gf", order)
    report.compare("[z^0] product", constant, "1/(q;q)", partition_gf(order))
    report.compare("[z^0] product", constant, "p(n)", enumerated_partition_numbers(order))
    return report


def verify_tcore_theta(t, order):
    t = require_modulus(t)
    report = IdentityReport("tcore-theta", order, t)
    report.compare("theta sum", theta_sum_tcore(t, order), "c_t(n)",
                   QSeries([count_t_cores(n, t) for n in range(order + 1)], order))
    return report


def verify_littlewood_gf(t, order):
    """1/(q;q)_∞ against the t-core theta sum divided by (q^t;q^t)_∞^t."""
    t = require_modulus(t)
    report = IdentityReport("littlewood", order, t)
    rhs = theta_sum_tcore(t, order) / pochhammer_factor(-1, t, t, False, order) ** t
    report.compare("1/(q;q)", partition_gf(order), "theta/(q^t;q^t)^t", rhs)
    return report


def _pair(offset, t, order):
    """(−q^offset;q^{2t})_∞ (−q^{2t−offset};q^{2t})_∞."""
    return pochhammer_factor(1, offset, 2 * t, False, order) * pochhammer_factor(1, 2 * t - offset, 2 * t, False, order)


def _require_special_modulus(t):
    t = require_modulus(t)
    if t < 2:
        raise DomainError(f"t must be at least 2 for the self-conjugate and doubled distinct identities, got {t}")
    return t


def gf_self_conjugate(t, order):
    """
    Product side: the odd-exponent Pochhammer factors grouped in residue pairs
    (2j − 1, 2t − 2j + 1) mod 2t, plus (−q^t;q^{2t})_∞ for odd t.
    Sum side: the same prefactor times Σ q^{Σ(2j−1)m_j + t·Σ m_j(m_j−1)}
    over (q^{2t};q^{2t})_∞^{⌊t/2⌋}.
    """
    t = _require_special_modulus(t)
    pairs = t // 2
    prefactor = pochhammer_factor(1, t, 2 * t, False, order) if t % 2 else QSeries.one(order)
    lhs = prefactor
    for j in range(1, pairs + 1):
        lhs = lhs * _pair(2 * j - 1, t, order)
    rhs = prefactor * lattice_theta_sum(2 * t, [2 * j - 1 for j in range(1, pairs + 1)], order)
    rhs = rhs / pochhammer_factor(-1, 2 * t, 2 * t, False, order) ** pairs
    report = IdentityReport("sc", order, t)
    report.compare("product", lhs, "lattice sum", rhs)
    report.compare("product", lhs, "(-q;q^2)", pochhammer_factor(1, 1, 2, False, order))
    report.compare("product", lhs, "sc(n)", QSeries([count_self_conjugate(n) for n in range(order + 1)], order))
    return report


def gf_doubled_distinct(t, order):
    """
    Odd t: prefactor (−q^{2t};q^{2t})_∞ with pairs (2j, 2t − 2j), j ≤ (t − 1)/2.
    Even t: prefactor (−q^t;q^t)_∞ with pairs j ≤ t/2 − 1.
    The sum side carries weights Σ 2j·m_j + t·Σ m_j(m_j−1).
    """
    t = _require_special_modulus(t)
    if t % 2:
        prefactor, pairs = pochhammer_factor(1, 2 * t, 2 * t, False, order), (t - 1) // 2
    else:
        prefactor, pairs = pochhammer_factor(1, t, t, False, order), t // 2 - 1
    lhs = prefactor
    for j in range(1, pairs + 1):
        lhs = lhs * _pair(2 * j, t, order)
    rhs = prefactor * lattice_theta_sum(2 * t, [2 * j for j in range(1, pairs + 1)], order)
    rhs = rhs / pochhammer_factor(-1, 2 * t, 2 * t, False, order) ** pairs
    report = IdentityReport("dd", order, t)
    report.compare("product", lhs, "lattice sum", rhs)
    report.compare("product", lhs, "(-q^2;q^2)", pochhammer_factor(1, 2, 2, False, order))
    report.compare("product", lhs, "dd(n)", QSeries([count_doubled_distinct(n) for n in range(order + 1)], order))
    return report


IDENTITIES = {
    "frobenius-gf": lambda t, order, margin: verify_frobenius_gf(order, margin),
    "jtp": lambda t, order, margin: jacobi_triple_product_check(order, margin=margin),
    "littlewood": lambda t, order, margin: verify_littlewood_gf(t, order),
    "tcore-theta": lambda t, order, margin: verify_tcore_theta(t, order),
    "sc": lambda t, order, margin: gf_self_conjugate(t, order),
    "dd": lambda t, order, margin: gf_doubled_distinct(t, order),
    "constant-term": lambda t, order, margin: verify_constant_term(t, order, margin),
}


def run_identity(name, t, order, margin=1):
    """
    Runs a registered identity check by name.

    Raises:
        DomainError: If the name is not registered.
    """
    if name not in IDENTITIES:
        raise DomainError(f"Unknown identity '{name}', expected one of {sorted(IDENTITIES)}")
    report = IDENTITIES[name](t, order, margin)
    logger.info(f"Identity {name} (t={t}, order={order}): {'pass' if report.passed else 'FAIL'}")
    return report
