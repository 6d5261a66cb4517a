import unittest

from hypothesis import given, strategies as st

from corequot.enumeration.generator import count_partitions
from corequot.frobenius.symbols import (
    ColoredFrobeniusSymbol,
    ColoredInteger,
    FrobeniusSymbol,
    colored_frobenius_arrays,
    colored_less,
    count_colored_frobenius,
    decode_bottom,
    format_colored,
    format_frobenius,
    from_colored,
    from_frobenius,
    is_t_core_frobenius,
    is_t_core_kolitsch,
    parse_frobenius,
    to_colored,
    to_frobenius,
)
from corequot.partition_core.partition import DomainError, ParseError, Partition, is_t_core_bruteforce

FIG1 = Partition((8, 7, 7, 4, 4, 2))

partitions_st = st.lists(st.integers(min_value=1, max_value=9), max_size=9).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True))))


def c(value, color, t=3):
    return ColoredInteger(value, color, t)


class TestFrobeniusSymbol(unittest.TestCase):
    def test_to_frobenius(self):
        self.assertEqual(to_frobenius(FIG1), FrobeniusSymbol((7, 5, 4, 0), (5, 4, 2, 1)))
        self.assertEqual(to_frobenius(Partition(())), FrobeniusSymbol((), ()))

    def test_from_frobenius(self):
        self.assertEqual(from_frobenius(FrobeniusSymbol((7, 5, 4, 0), (5, 4, 2, 1))), FIG1)
        self.assertEqual(from_frobenius(FrobeniusSymbol((1,), (0,))), Partition((2,)))

    def test_weight(self):
        self.assertEqual(FrobeniusSymbol((7, 5, 4, 0), (5, 4, 2, 1)).weight, 32)

    def test_invalid_symbols(self):
        with self.assertRaises(DomainError):
            FrobeniusSymbol((1, 2), (1, 0))
        with self.assertRaises(DomainError):
            FrobeniusSymbol((1,), (1, 0))
        with self.assertRaises(DomainError):
            FrobeniusSymbol((0, -1), (1, 0))

    @given(partitions_st)
    def test_round_trip(self, lam):
        self.assertEqual(from_frobenius(to_frobenius(lam)), lam)

    def test_text_format(self):
        symbol = parse_frobenius("7 5 4 0 / 5 4 2 1")
        self.assertEqual(from_frobenius(symbol), FIG1)
        self.assertEqual(format_frobenius(symbol), "7 5 4 0 / 5 4 2 1")
        self.assertEqual(parse_frobenius("- / -"), FrobeniusSymbol())
        with self.assertRaises(ParseError):
            parse_frobenius("1 2 / 0 1")
        with self.assertRaises(ParseError):
            parse_frobenius("1 / 0 / 2")
        with self.assertRaises(ParseError):
            parse_frobenius("1 x / 0 1")
        with self.assertRaises(ParseError):
            parse_frobenius("\u00b2 / 0")


class TestColoredOrder(unittest.TestCase):
    def test_value_dominates_color(self):
        self.assertTrue(colored_less(c(1, 2), c(2, 0)))
        self.assertTrue(c(1, 0) < c(1, 2))
        self.assertFalse(c(1, 2) < c(1, 2))
        self.assertTrue(c(2, 0) > c(1, 2))

    def test_moduli_must_agree(self):
        with self.assertRaises(DomainError):
            colored_less(c(1, 0, 2), c(1, 0, 3))

    def test_color_range(self):
        with self.assertRaises(DomainError):
            ColoredInteger(1, 3, 3)

    @given(st.integers(0, 6), st.integers(0, 2), st.integers(0, 6), st.integers(0, 2))
    def test_trichotomy(self, v1, c1, v2, c2):
        x, y = c(v1, c1), c(v2, c2)
        self.assertEqual(sum([x < y, x == y, y < x]), 1)


class TestColoredSymbol(unittest.TestCase):
    def test_worked_example(self):
        colored = to_colored(to_frobenius(FIG1), 3)
        self.assertEqual(colored.top, (c(2, 1), c(1, 2), c(1, 1), c(0, 0)))
        self.assertEqual(colored.bottom, (c(1, 0), c(1, 1), c(0, 0), c(0, 1)))
        self.assertEqual(colored.display_bottom(), (c(1, 1), c(1, 0), c(0, 1), c(0, 0)))

    def test_bottom_decoding_reverses_colors(self):
        self.assertEqual(decode_bottom(c(1, 0)), 5)
        self.assertEqual(decode_bottom(c(1, 1)), 4)

    def test_from_colored(self):
        symbol = to_frobenius(FIG1)
        self.assertEqual(from_colored(to_colored(symbol, 3)), symbol)

    def test_rejects_mixed_moduli(self):
        with self.assertRaises(DomainError):
            ColoredFrobeniusSymbol((c(0, 0, 2),), (c(0, 0),), 3)

    def test_format(self):
        colored = to_colored(to_frobenius(Partition((3, 1, 1))), 3)
        self.assertEqual(format_colored(colored), "0:2 / 0:0")


class TestCorePredicates(unittest.TestCase):
    def test_frobenius_conditions(self):
        self.assertTrue(is_t_core_frobenius(to_frobenius(Partition((3, 1, 1))), 3))
        self.assertFalse(is_t_core_frobenius(to_frobenius(Partition((3, 1, 1))), 2))
        self.assertFalse(is_t_core_frobenius(to_frobenius(FIG1), 3))
        self.assertTrue(is_t_core_frobenius(FrobeniusSymbol(), 1))

    def test_colored_conditions(self):
        self.assertTrue(is_t_core_kolitsch(to_colored(to_frobenius(Partition((3, 1, 1))), 3)))
        self.assertFalse(is_t_core_kolitsch(to_colored(to_frobenius(FIG1), 3)))

    @given(partitions_st, st.integers(min_value=1, max_value=6))
    def test_three_predicates_agree(self, lam, t):
        symbol = to_frobenius(lam)
        brute = is_t_core_bruteforce(lam, t)
        self.assertEqual(is_t_core_frobenius(symbol, t), brute)
        self.assertEqual(is_t_core_kolitsch(to_colored(symbol, t)), brute)


class TestColoredCount(unittest.TestCase):
    def test_two_colored_partitions_of_two(self):
        self.assertEqual(count_colored_frobenius(2, 2), 9)

    def test_one_color_gives_partition_numbers(self):
        for n in range(8):
            self.assertEqual(count_colored_frobenius(n, 1), count_partitions(n))

    def test_arrays_are_strictly_decreasing(self):
        for top, bottom in colored_frobenius_arrays(4, 2):
            self.assertEqual(len(top), len(bottom))
            for row in (top, bottom):
                self.assertTrue(all(row[k + 1] < row[k] for k in range(len(row) - 1)))
            self.assertEqual(sum(x.value for x in top + bottom) + len(top), 4)


if __name__ == '__main__':
    unittest.main()
