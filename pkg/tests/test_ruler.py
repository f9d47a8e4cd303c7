import pytest
from hypothesis import given, strategies as st

from translate_kiss import (
    ParameterError,
    PrefixTable,
    RangeError,
    check_lemma1,
    check_lemma1_exhaustive,
    prefix_sum,
    ruler,
    ruler_by_halving,
)

# First 32 terms, frozen from the displayed definition of the sequence.
FIRST_32 = [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 5,
            1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1, 6]


def reconstruction_sequence(limit):
    """Oracle: rebuild the sequence from the rule that dropping odd terms
    and decrementing even terms reproduces it.  No bit inspection."""
    s = [0] * (limit + 1)
    for i in range(1, limit + 1):
        s[i] = 1 if i % 2 == 1 else s[i // 2] + 1
    return s


def test_known_values():
    assert ruler(1) == 1
    assert ruler(2) == 2
    assert ruler(8) == 4
    assert ruler(32) == 6
    assert [ruler(i) for i in range(1, 33)] == FIRST_32


def test_odd_terms_are_one():
    assert all(ruler(i) == 1 for i in range(1, 2000, 2))


def test_powers_of_two():
    # counting the bits of 2^j directly gives j + 1
    for j in range(21):
        assert ruler(2**j) == j + 1
        assert ruler(2**j) == len(bin(2**j)) - 2


def test_invalid_argument():
    with pytest.raises(ParameterError):
        ruler(0)
    with pytest.raises(ParameterError):
        ruler(-3)
    with pytest.raises(ParameterError):
        ruler_by_halving(0)


@given(st.integers(min_value=1, max_value=2**40))
def test_halving_agrees_with_bits(i):
    assert ruler(i) == ruler_by_halving(i)


def test_reconstruction_agrees_sampled():
    s = reconstruction_sequence(4096)
    assert [ruler(i) for i in range(1, 4097)] == s[1:]


class TestPrefixTable:
    def test_build_and_invariants(self):
        table = PrefixTable.build(256)
        assert table.sums[0] == 0
        diffs = [table.sums[i] - table.sums[i - 1] for i in range(1, 257)]
        assert diffs == [ruler(i) for i in range(1, 257)]
        assert all(d >= 1 for d in diffs)

    def test_prefix_sum_examples(self):
        table = PrefixTable.build(64)
        assert prefix_sum(0, table) == 0
        assert prefix_sum(4, table) == 7  # 1 + 2 + 1 + 3

    def test_power_of_two_sums(self):
        table = PrefixTable.build(2**16)
        for k in range(1, 17):
            # direct summation oracle
            assert sum(ruler(i) for i in range(1, 2**k + 1)) == 2 ** (k + 1) - 1
            assert prefix_sum(2**k, table) == 2 ** (k + 1) - 1

    def test_out_of_range(self):
        table = PrefixTable.build(16)
        with pytest.raises(RangeError):
            prefix_sum(17, table)
        with pytest.raises(ParameterError):
            prefix_sum(-1, table)
        with pytest.raises(ParameterError):
            PrefixTable.build(0)


class TestLemma1:
    def test_examples(self):
        table = PrefixTable.build(64)
        assert check_lemma1(1, 7, table)
        # window equal to the prefix itself: equality
        assert check_lemma1(5, 1, table)
        assert prefix_sum(5, table) == prefix_sum(5, table)

    def test_out_of_range_window(self):
        table = PrefixTable.build(16)
        with pytest.raises(RangeError):
            check_lemma1(8, 10, table)
        with pytest.raises(ParameterError):
            check_lemma1(0, 1, table)

    def test_small_exhaustive_matches_naive(self):
        table = PrefixTable.build(200)
        s = [ruler(i) for i in range(1, 201)]
        for k in range(1, 33):
            for r in range(1, 201 - k + 2):
                if r + k - 1 > 200:
                    continue
                naive = sum(s[: k]) <= sum(s[r - 1 : r + k - 1])
                assert check_lemma1(k, r, table) == naive

    def test_exhaustive_checker_agrees_with_scalar(self):
        table = PrefixTable.build(300)
        assert check_lemma1_exhaustive(40, 300, table) is None

    def test_even_reduction_identity(self):
        # halving the prefix length: sum of first k terms = k + sum of first k/2
        table = PrefixTable.build(2**16)
        for k in range(2, 2**16 + 1, 2):
            assert table.sums[k] == k + table.sums[k // 2]

    def test_ceiling_division_step(self):
        # even-length windows shrink to half-length windows at ceil(r/2)
        table = PrefixTable.build(2048)
        for k in range(2, 64, 2):
            for r in range(1, 512):
                rp = (r + 1) // 2
                lhs = table.sums[r + k - 1] - table.sums[r - 1]
                rhs = k + table.sums[rp + k // 2 - 1] - table.sums[rp - 1]
                assert lhs == rhs


@given(st.integers(min_value=1, max_value=512))
def test_prefix_sum_strictly_monotone(i):
    table = PrefixTable.build(513)
    assert prefix_sum(i, table) > prefix_sum(i - 1, table)
