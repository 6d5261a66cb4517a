# corequot/qseries/series.py
import logging
import operator

import numpy as np

from corequot.partition_core.partition import DomainError

logger = logging.getLogger(__name__)


def _require_order(order):
    order = operator.index(order)
    if order < 0:
        raise DomainError(f"Truncation order must be nonnegative, got {order}")
    return order


def _exact(values, length):
    """Object-dtype coefficient array of Python ints, truncated or zero-padded to length."""
    coeffs = np.zeros(length, dtype=object)
    coeffs[:] = 0
    values = [int(v) for v in list(values)[:length]]
    coeffs[:len(values)] = values
    return coeffs


class QSeries:
    """
    A power series in q truncated after q^order, with exact integer coefficients.

    Coefficients live in a numpy object array so that they stay arbitrary
    precision Python ints. Binary operations truncate to the smaller order.
    """

    def __init__(self, coeffs, order=None):
        values = list(coeffs)
        if order is None:
            order = len(values) - 1
        self.order = _require_order(order)
        self.coeffs = _exact(values, self.order + 1)
        self.coeffs.flags.writeable = False

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"QSeries(order={self.order}, coeffs=[{head}{', ...' if self.order > 5 else ''}])"

    def __getitem__(self, n):
        return int(self.coeffs[n]) if 0 <= n <= self.order else 0

    def to_list(self):
        return [int(c) for c in self.coeffs]

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, np.integer)):
            return QSeries([int(other)], self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        return QSeries(self.coeffs[:order + 1] + other.coeffs[:order + 1], order)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(-self.coeffs, self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        order = min(self.order, other.order)
        a = self.coeffs[:order + 1]
        b = other.coeffs[:order + 1]
        result = np.zeros(order + 1, dtype=object)
        result[:] = 0
        for i, c in enumerate(a):
            if c:
                result[i:] += c * b[:order + 1 - i]
        return QSeries(result, order)

    __rmul__ = __mul__

    def invert(self):
        """
        The reciprocal series.

        Raises:
            DomainError: If the constant term is not ±1, so the reciprocal has
                         non-integer coefficients or does not exist.
        """
        a0 = self[0]
        if a0 not in (1, -1):
            raise DomainError(f"Series with constant term {a0} has no integer reciprocal")
        a = self.coeffs
        b = np.zeros(self.order + 1, dtype=object)
        b[:] = 0
        b[0] = a0
        for k in range(1, self.order + 1):
            b[k] = -a0 * (a[1:k + 1] * b[k - 1::-1]).sum()
        return QSeries(b, self.order)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.invert()

    def __pow__(self, power):
        power = operator.index(power)
        if power < 0:
            return self.invert() ** (-power)
        result = QSeries.one(self.order)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, k):
        """Multiplies by q^k, k ≥ 0."""
        if k < 0:
            raise DomainError(f"Shift must be nonnegative, got {k}")
        result = np.zeros(self.order + 1, dtype=object)
        result[:] = 0
        if k <= self.order:
            result[k:] = self.coeffs[:self.order + 1 - k]
        return QSeries(result, self.order)

    def times_binomial(self, sign, exponent):
        """Multiplies by (1 + sign·q^exponent), exponent ≥ 1."""
        result = self.coeffs.copy()
        if exponent <= self.order:
            result[exponent:] = result[exponent:] + sign * self.coeffs[:self.order + 1 - exponent]
        return QSeries(result, self.order)

    def divide_binomial(self, sign, exponent):
        """Divides by (1 + sign·q^exponent), exponent ≥ 1."""
        result = self.coeffs.copy()
        result.flags.writeable = True
        for n in range(exponent, self.order + 1):
            result[n] -= sign * result[n - exponent]
        return QSeries(result, self.order)

    def first_mismatch(self, other):
        """The smallest n ≤ the common order whose coefficients differ, or None."""
        order = min(self.order, other.order)
        for n in range(order + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.first_mismatch(other) is None

    __hash__ = None


def pochhammer_factor(sign, offset, step, inverse, order):
    """
    The truncated product ∏_{k≥0} (1 + sign·q^{offset + k·step}), or its
    reciprocal when inverse is set. Factors whose exponent exceeds the order
    contribute nothing and are skipped.

    Args:
        sign (int): +1 or −1, so the product is (∓q^offset; q^step)_∞.
        offset (int): Exponent of the first factor.
        step (int): Exponent increment between factors.
        inverse (bool): Return the reciprocal product.
        order (int): Truncation order.

    Returns:
        QSeries: The truncated product.

    Raises:
        DomainError: If sign is not ±1, step is not positive, offset is negative,
                     or a reciprocal is requested with offset 0.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    if step < 1 or offset < 0:
        raise DomainError(f"Need offset >= 0 and step >= 1, got offset={offset}, step={step}")
    if inverse and offset == 0:
        raise DomainError(f"(1 {'+' if sign > 0 else '-'} 1) has no integer reciprocal")
    series = QSeries.one(order)
    if offset == 0:
        series = series * (1 + sign)
        offset = step
    for exponent in range(offset, series.order + 1, step):
        series = series.divide_binomial(sign, exponent) if inverse else series.times_binomial(sign, exponent)
    return series


def partition_gf(order):
    """1/(q;q)_∞, the generating function of p(n)."""
    return pochhammer_factor(-1, 1, 1, True, order)


class LaurentBlock:
    """
    A Laurent polynomial in z with truncated q-series coefficients, kept on the
    z-window −window ≤ m ≤ window.

    Row m + window of `rows` holds the coefficient of z^m. Products drop every
    term whose z-exponent leaves the window; usable_window() says which rows
    are still exact afterwards.
    """

    def __init__(self, window, order):
        if window < 0:
            raise DomainError(f"z-window must be nonnegative, got {window}")
        self.window = window
        self.order = _require_order(order)
        self.rows = np.zeros((2 * window + 1, self.order + 1), dtype=object)
        self.rows[:, :] = 0
        self.rows[window, 0] = 1
        self.plus_exponents = []
        self.minus_exponents = []

    def row(self, m):
        """The coefficient of z^m as a QSeries (zero outside the window)."""
        if abs(m) > self.window:
            return QSeries.zero(self.order)
        return QSeries(self.rows[m + self.window], self.order)

    def constant_term(self):
        return self.row(0)

    def multiply(self, z_power, sign, exponent):
        """In place, multiplies by (1 + sign·z^{z_power}·q^exponent) with z_power = ±1."""
        if z_power not in (1, -1):
            raise DomainError(f"z_power must be +1 or -1, got {z_power}")
        if exponent > self.order:
            return
        (self.plus_exponents if z_power > 0 else self.minus_exponents).append(exponent)
        old = self.rows.copy()
        width = self.order + 1 - exponent
        if z_power > 0:
            self.rows[1:, exponent:] += sign * old[:-1, :width]
        else:
            self.rows[:-1, exponent:] += sign * old[1:, :width]

    @classmethod
    def product(cls, factors, window, order):
        """
        Multiplies out factors given as (z_power, sign, exponent) triples, each
        standing for (1 + sign·z^{z_power}·q^exponent).
        """
        block = cls(window, order)
        for z_power, sign, exponent in factors:
            block.multiply(z_power, sign, exponent)
        logger.debug(f"Laurent product of {len(block.plus_exponents) + len(block.minus_exponents)} "
                     f"factors on window {window}, order {order}")
        return block

    def usable_window(self):
        return exact_rows(self.plus_exponents, self.minus_exponents, self.window, self.order)


def _cheapest(exponents):
    """prefix[k] = smallest total q-weight of k distinct factors from one side."""
    prefix = [0]
    for e in sorted(exponents):
        prefix.append(prefix[-1] + e)
    return prefix


def exact_rows(plus_exponents, minus_exponents, window, order):
    """
    The largest M′ ≤ window such that every row |m| ≤ M′ of a windowed product
    is exact to the given order, or −1 if even the z⁰ row may be wrong.

    A term is lost only if it picks at least window + 1 factors from one side,
    which costs at least the sum of that many smallest exponents on that side
    plus the cheapest completion to z^m from the other side.
    """
    plus, minus = _cheapest(plus_exponents), _cheapest(minus_exponents)

    def lost(own, other, completion):
        need = window + 1
        if need >= len(own) or completion >= len(other):
            return False
        return own[need] + other[completion] <= order

    def row_exact(m):
        need = window + 1
        return not lost(plus, minus, need - m) and not lost(minus, plus, need + m)

    usable = -1
    for m in range(0, window + 1):
        if not (row_exact(m) and row_exact(-m)):
            break
        usable = m
    return usable


def required_window(plus_exponents, minus_exponents, order, rows=0):
    """The smallest window whose exact rows reach |m| ≤ rows."""
    window = rows
    while exact_rows(plus_exponents, minus_exponents, window, order) < rows:
        window += 1
    return window


def jtp_exponents(order):
    """q-exponents of the z and 1/z factors of (−zq;q)_∞(−1/z;q)_∞."""
    return list(range(1, order + 1)), list(range(0, order + 1))


def usable_window(window, order):
    """Exact rows of the (−zq;q)_∞(−1/z;q)_∞ product on the given window."""
    plus, minus = jtp_exponents(order)
    return exact_rows(plus, minus, window, order)
