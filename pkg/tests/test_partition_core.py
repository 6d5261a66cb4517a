import random
import unittest

from hypothesis import given, strategies as st

from corequot.partition_core.partition import (
    EMPTY,
    DomainError,
    HookCase,
    ParseError,
    Partition,
    boxes_with_hook_length,
    classify_hook,
    classify_hooks,
    conjugate,
    count_hooks_of_length,
    durfee,
    hook_length,
    hook_matrix,
    hook_multiset,
    is_t_core_bruteforce,
    parse_partition,
    remove_rim_hook,
    require_modulus,
    strip_t_core,
)

FIG1 = Partition((8, 7, 7, 4, 4, 2))

partitions_st = st.lists(st.integers(min_value=1, max_value=9), max_size=9).map(
    lambda parts: Partition(tuple(sorted(parts, reverse=True))))


class TestPartitionBasics(unittest.TestCase):
    def test_trailing_zeros_are_dropped(self):
        self.assertEqual(Partition((3, 1, 0, 0)), Partition((3, 1)))
        self.assertEqual(Partition((3, 1, 0)).length, 2)

    def test_rejects_increasing_or_negative_parts(self):
        with self.assertRaises(DomainError):
            Partition((1, 2))
        with self.assertRaises(DomainError):
            Partition((2, -1))
        with self.assertRaises(DomainError):
            Partition((2.5,))

    def test_size_and_part(self):
        self.assertEqual(FIG1.size, 32)
        self.assertEqual(FIG1.part(1), 8)
        self.assertEqual(FIG1.part(7), 0)

    def test_require_modulus(self):
        self.assertEqual(require_modulus(3), 3)
        with self.assertRaises(DomainError):
            require_modulus(0)


class TestParsing(unittest.TestCase):
    def test_parse_plain_and_parenthesized(self):
        self.assertEqual(parse_partition("8,7,7,4,4,2"), FIG1)
        self.assertEqual(parse_partition("(3, 1, 1)"), Partition((3, 1, 1)))
        self.assertEqual(parse_partition("3,1,0"), Partition((3, 1)))

    def test_parse_empty(self):
        self.assertEqual(parse_partition(""), EMPTY)
        self.assertEqual(parse_partition("()"), EMPTY)

    def test_parse_error_names_token(self):
        with self.assertRaises(ParseError) as ctx:
            parse_partition("3,a,1")
        self.assertIn("'a'", str(ctx.exception))

    def test_parse_accepts_ascii_digits_only(self):
        for text in ("\u00b2", "3,\u0663", "1,\u00bd"):
            with self.subTest(text=text):
                with self.assertRaises(ParseError):
                    parse_partition(text)

    def test_parse_rejects_increasing(self):
        with self.assertRaises(ParseError):
            parse_partition("1,2")

    def test_format_round_trip(self):
        self.assertEqual(str(FIG1), "8,7,7,4,4,2")
        self.assertEqual(str(EMPTY), "")


class TestConjugateAndDurfee(unittest.TestCase):
    def test_conjugate(self):
        self.assertEqual(conjugate(FIG1), Partition((6, 6, 5, 5, 3, 3, 3, 1)))
        self.assertEqual(conjugate(EMPTY), EMPTY)

    def test_self_conjugate_example(self):
        lam = Partition((8, 5, 5, 4, 3, 1, 1, 1))
        self.assertEqual(conjugate(lam), lam)

    def test_durfee(self):
        self.assertEqual(durfee(FIG1), 4)
        self.assertEqual(durfee(EMPTY), 0)
        self.assertEqual(durfee(Partition((5, 5, 5, 5, 5))), 5)

    @given(partitions_st)
    def test_conjugation_is_an_involution(self, lam):
        self.assertEqual(conjugate(conjugate(lam)), lam)


class TestHooks(unittest.TestCase):
    def test_hook_lengths_from_figure(self):
        self.assertEqual(hook_length(FIG1, 1, 1), 13)
        self.assertEqual(hook_length(FIG1, 1, 2), 12)
        self.assertEqual(hook_length(Partition((1,)), 1, 1), 1)

    def test_hook_outside_diagram(self):
        with self.assertRaises(DomainError):
            hook_length(FIG1, 6, 3)
        with self.assertRaises(DomainError):
            hook_length(FIG1, 0, 1)

    def test_hook_matrix_matches_figure(self):
        self.assertEqual(hook_matrix(FIG1), [
            [13, 12, 10, 9, 6, 5, 4, 1],
            [11, 10, 8, 7, 4, 3, 2],
            [10, 9, 7, 6, 3, 2, 1],
            [6, 5, 3, 2],
            [5, 4, 2, 1],
            [2, 1],
        ])

    def test_hook_multiset(self):
        self.assertEqual(hook_multiset(Partition((2, 1))), {3: 1, 1: 2})
        self.assertEqual(sum(hook_multiset(FIG1).values()), 32)
        self.assertEqual(hook_multiset(EMPTY), {})

    @given(partitions_st)
    def test_hook_multiset_is_conjugation_invariant(self, lam):
        self.assertEqual(hook_multiset(lam), hook_multiset(conjugate(lam)))
        self.assertEqual(sum(hook_multiset(lam).values()), lam.size)

    def test_count_hooks_of_length(self):
        self.assertEqual(count_hooks_of_length(FIG1, 1), 4)
        self.assertEqual(count_hooks_of_length(FIG1, 3), 3)
        self.assertEqual(count_hooks_of_length(EMPTY, 3), 0)
        self.assertEqual(count_hooks_of_length(Partition((2, 1)), 3), 1)

    def test_boxes_with_hook_length_order(self):
        self.assertEqual(boxes_with_hook_length(FIG1, 3), [(2, 6), (3, 5), (4, 3)])


class TestCores(unittest.TestCase):
    def test_bruteforce_predicate(self):
        self.assertTrue(is_t_core_bruteforce(Partition((3, 1, 1)), 3))
        self.assertTrue(is_t_core_bruteforce(EMPTY, 4))
        self.assertFalse(is_t_core_bruteforce(Partition((2,)), 2))
        with self.assertRaises(DomainError):
            is_t_core_bruteforce(FIG1, 0)

    def test_only_one_core_is_empty(self):
        self.assertFalse(is_t_core_bruteforce(Partition((1,)), 1))

    def test_remove_rim_hook(self):
        self.assertEqual(remove_rim_hook(Partition((2,)), 1, 1), EMPTY)
        self.assertEqual(remove_rim_hook(Partition((3, 1, 1)), 1, 1), EMPTY)
        # hook at (2,6) of the figure has length 3
        stripped = remove_rim_hook(FIG1, 2, 6)
        self.assertEqual(stripped.size, FIG1.size - 3)
        self.assertEqual(stripped, Partition((8, 6, 5, 4, 4, 2)))

    def test_strip_t_core(self):
        self.assertEqual(strip_t_core(FIG1, 3), Partition((3, 1, 1)))
        self.assertEqual(strip_t_core(Partition((2,)), 2), EMPTY)
        self.assertEqual(strip_t_core(Partition((3, 1, 1)), 3), Partition((3, 1, 1)))

    def test_strip_t_core_is_order_independent(self):
        rng = random.Random(7)
        for _ in range(20):
            self.assertEqual(strip_t_core(FIG1, 3, rng), Partition((3, 1, 1)))

    @given(partitions_st, st.integers(min_value=1, max_value=5))
    def test_stripped_core_properties(self, lam, t):
        core = strip_t_core(lam, t)
        self.assertTrue(is_t_core_bruteforce(core, t))
        self.assertEqual((lam.size - core.size) % t, 0)


class TestHookClassification(unittest.TestCase):
    def test_arm_leg_box(self):
        hook = classify_hook(FIG1, 1, 1)
        self.assertEqual(hook.case, HookCase.ARM_LEG)
        self.assertEqual(hook.length, 13)
        self.assertIsNone(hook.lower)

    def test_arm_box_bounds(self):
        hook = classify_hook(FIG1, 1, 5)
        self.assertEqual(hook.case, HookCase.ARM)
        self.assertEqual((hook.lower, hook.length, hook.upper), (3, 6, 7))

    def test_leg_box_bounds(self):
        hook = classify_hook(FIG1, 5, 1)
        self.assertEqual(hook.case, HookCase.LEG)
        self.assertEqual((hook.lower, hook.length, hook.upper), (4, 5, 6))

    @given(partitions_st)
    def test_bounds_hold_for_every_box(self, lam):
        hooks = classify_hooks(lam)
        self.assertEqual(len(hooks), lam.size)
        for hook in hooks:
            if hook.case is not HookCase.ARM_LEG:
                self.assertLess(hook.lower, hook.length)
                self.assertLess(hook.length, hook.upper)


if __name__ == '__main__':
    unittest.main()
