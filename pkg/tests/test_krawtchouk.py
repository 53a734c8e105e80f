"""Krawtchouk evaluation: defining sums, recurrences, and the circulant route.

Every closed-form value asserted here was frozen from an independent
brute-force character sum (see the oracle helpers at the top).
"""

import itertools
import random

import pytest

from scheme_spectra import (
    Composition,
    CycInt,
    DivisibilityError,
    DomainError,
    GenKrawValue,
    NotFound,
    RangeError,
    SumMismatch,
    UnsupportedSize,
    binom,
    comp,
    cyclic,
    enumerate_compositions,
    enumerate_shell,
    first_nonpositive,
    first_root_ratio,
    gen_kraw,
    gen_kraw_circulant,
    kraw,
    multinom,
    word_char_value,
    zero_shell_predicate,
)

# ---------------------------------------------------------------------------
# oracles


def char_sum_oracle(group, n, shell_label, x):
    """Sum the character of x over a shell, one word at a time."""
    total = CycInt.from_int(group.char_order, 0)
    for y in enumerate_shell(group, n, shell_label):
        total = total + word_char_value(group, x, y)
    return total


# ---------------------------------------------------------------------------
# classical values


def test_frozen_table_n4_q2():
    table = [[kraw(4, 2, i, j) for j in range(5)] for i in range(5)]
    assert table == [
        [1, 1, 1, 1, 1],
        [4, 2, 0, -2, -4],
        [6, 0, -2, 0, 6],
        [4, -2, 0, 2, -4],
        [1, -1, 1, -1, 1],
    ]


def test_frozen_rows_n3_q3():
    assert [kraw(3, 3, 1, j) for j in range(4)] == [6, 3, 0, -3]
    assert [kraw(3, 3, 2, j) for j in range(4)] == [12, 0, -3, 3]


@pytest.mark.parametrize("q", [2, 3])
def test_kraw_equals_character_sum(q):
    group = cyclic(q)
    for n in (1, 2, 3, 4):
        for j in range(n + 1):
            x = tuple([1] * j + [0] * (n - j))
            for i in range(n + 1):
                expected = char_sum_oracle(group, n, i, x)
                assert expected == kraw(n, q, i, j)


def test_kraw_at_zero_is_shell_size():
    for n, q in ((5, 2), (4, 3), (3, 5)):
        for i in range(n + 1):
            assert kraw(n, q, i, 0) == (q - 1) ** i * binom(n, i)


def test_linear_kraw_closed_form():
    for n, q in ((6, 2), (5, 3), (7, 4)):
        for j in range(n + 1):
            assert kraw(n, q, 1, j) == (q - 1) * n - q * j


def test_reciprocity_exhaustive():
    for q in (2, 3, 4, 5):
        for n in range(1, 9):
            for i in range(n + 1):
                for j in range(n + 1):
                    lhs = (q - 1) ** j * binom(n, j) * kraw(n, q, i, j)
                    rhs = (q - 1) ** i * binom(n, i) * kraw(n, q, j, i)
                    assert lhs == rhs


def test_columns_sum_to_zero_off_the_origin():
    for q in (2, 3, 5):
        for n in range(1, 8):
            for j in range(n + 1):
                total = sum(kraw(n, q, i, j) for i in range(n + 1))
                assert total == (q**n if j == 0 else 0)


def test_kraw_argument_validation():
    with pytest.raises(DomainError):
        kraw(4, 1, 1, 1)
    with pytest.raises(DomainError):
        kraw(-1, 2, 0, 0)
    with pytest.raises(RangeError):
        kraw(4, 2, 5, 1)
    with pytest.raises(RangeError):
        kraw(4, 2, 1, -1)


def test_first_nonpositive():
    assert first_nonpositive(8, 2, 3) == 2
    assert first_nonpositive(9, 3, 6) == 1
    assert first_nonpositive(4, 2, 2) == 1  # K_1(2) = 0 counts
    with pytest.raises(NotFound):
        first_nonpositive(5, 2, 0)


# ---------------------------------------------------------------------------
# composition-indexed values


def test_gen_kraw_routes_agree():
    for q in (2, 3):
        group = cyclic(q)
        for n in (1, 2, 3, 4):
            comps = list(enumerate_compositions(q, n))
            for ci, cj in itertools.product(comps, repeat=2):
                a = gen_kraw(group, n, ci, cj, method="brute")
                b = gen_kraw(group, n, ci, cj, method="extraction")
                assert a.value == b.value


def test_gen_kraw_is_independent_of_the_representative():
    group = cyclic(3)
    n, i, j = 5, Composition((2, 2, 1)), Composition((2, 1, 2))
    reference = gen_kraw(group, n, i, j).value
    rng = random.Random(11)
    reps = list(enumerate_shell(group, n, j))
    for x in rng.sample(reps, 6):
        assert comp(group, x) == j
        assert char_sum_oracle(group, n, i, x) == reference


def test_gen_kraw_against_raw_character_sum():
    group = cyclic(4)
    n = 3
    i, j = Composition((1, 1, 0, 1)), Composition((1, 0, 2, 0))
    x = (2, 2, 0)
    assert comp(group, x) == j
    assert gen_kraw(group, n, i, j).value == char_sum_oracle(group, n, i, x)


def test_generalized_reciprocity():
    for q in (2, 3):
        group = cyclic(q)
        for n in (2, 3, 4, 5):
            comps = list(enumerate_compositions(q, n))
            for ci, cj in itertools.product(comps, repeat=2):
                lhs = gen_kraw(group, n, ci, cj).value * multinom(n, cj)
                rhs = gen_kraw(group, n, cj, ci).value * multinom(n, ci)
                assert lhs == rhs


def test_composition_values_refine_weight_values():
    # summing over all composition shells of a fixed weight recovers the
    # classical value at the representative word
    group = cyclic(3)
    n = 4
    x = (1, 1, 2, 0)  # weight 3
    for w in range(n + 1):
        total = CycInt.from_int(group.char_order, 0)
        for ci in enumerate_compositions(3, n):
            if n - ci[0] == w:
                total = total + gen_kraw(group, n, ci, comp(group, x)).value
        assert total == kraw(n, 3, w, 3)


def test_gen_kraw_validation():
    group = cyclic(3)
    with pytest.raises(SumMismatch):
        gen_kraw(group, 3, Composition((1, 1, 0)), Composition((1, 1, 1)))
    with pytest.raises(SumMismatch):
        gen_kraw(group, 3, Composition((1, 1, 1)), Composition((3, 0)))
    with pytest.raises(DomainError):
        gen_kraw(group, 3, Composition((1, 1, 1)), Composition((1, 1, 1)), method="magic")


def test_certified_integer_passthrough():
    group = cyclic(2)
    val = gen_kraw(group, 4, Composition((2, 2)), Composition((2, 2)))
    assert isinstance(val, GenKrawValue)
    assert val.expect_integer() == -2


# ---------------------------------------------------------------------------
# circulant-determinant route, balanced rows only


def test_circulant_frozen_values():
    assert gen_kraw_circulant(2, 4, Composition((4, 0))) == 6
    assert gen_kraw_circulant(2, 4, Composition((2, 2))) == -2
    assert gen_kraw_circulant(3, 3, Composition((1, 1, 1))) == -3
    assert gen_kraw_circulant(3, 6, Composition((2, 2, 2))) == 9
    assert gen_kraw_circulant(5, 5, Composition((1, 1, 1, 1, 1))) == -5


def test_circulant_matches_extraction_everywhere():
    for q, n in ((2, 2), (2, 4), (2, 6), (3, 3), (3, 6), (4, 4), (5, 5)):
        group = cyclic(q)
        balanced = Composition.balanced(q, n)
        for r in enumerate_compositions(q, n):
            expected = gen_kraw(group, n, balanced, r).expect_integer()
            assert gen_kraw_circulant(q, n, r) == expected


def test_circulant_matches_extraction_sampled_large_q():
    # q = 6 and q = 7 have too many shells for the exhaustive sweep, so fix
    # a deterministic sample
    rng = random.Random(1729)
    for q, n in ((6, 6), (7, 7)):
        group = cyclic(q)
        balanced = Composition.balanced(q, n)
        shells = list(enumerate_compositions(q, n))
        for r in rng.sample(shells, 8):
            expected = gen_kraw(group, n, balanced, r).expect_integer()
            assert gen_kraw_circulant(q, n, r) == expected


def test_circulant_guards():
    with pytest.raises(UnsupportedSize):
        gen_kraw_circulant(8, 8, Composition((1,) * 8))
    with pytest.raises(DivisibilityError):
        gen_kraw_circulant(3, 7, Composition((3, 2, 2)))
    with pytest.raises(SumMismatch):
        gen_kraw_circulant(2, 4, Composition((3, 2)))


def test_zero_shells_vanish():
    for q in (2, 3, 4):
        for n in (q, 2 * q):
            for r in enumerate_compositions(q, n):
                if zero_shell_predicate(q, r):
                    assert gen_kraw_circulant(q, n, r) == 0


def test_zero_predicate_is_exact_for_prime_q():
    # for prime q the converse holds on these sizes: nonzero values occur
    # exactly on shells whose weighted sum is divisible by q
    for q in (2, 3, 5):
        n = q
        for r in enumerate_compositions(q, n):
            value = gen_kraw_circulant(q, n, r)
            if zero_shell_predicate(q, r):
                assert value == 0
            else:
                assert value != 0


def test_shift_flips_sign_by_parity():
    for q, n in ((2, 2), (2, 4), (3, 3), (3, 6), (4, 4)):
        sign = -1 if ((q - 1) * n // q) % 2 else 1
        for r in enumerate_compositions(q, n):
            shifted = r.shift_left()
            assert gen_kraw_circulant(q, n, shifted) == sign * gen_kraw_circulant(q, n, r)


# ---------------------------------------------------------------------------
# rate diagnostics


def test_first_root_ratio_binary_closed_form():
    import math

    for delta in (0.05, 0.11, 0.3, 0.5):
        expected = 0.5 - math.sqrt(delta * (1 - delta))
        assert first_root_ratio(2, delta) == pytest.approx(expected, abs=1e-15)


def test_first_root_ratio_endpoints_and_guards():
    assert first_root_ratio(2, 0.5) == pytest.approx(0.0, abs=1e-15)
    assert first_root_ratio(3, 0.0) == pytest.approx(2 / 3, abs=1e-15)
    with pytest.raises(DomainError):
        first_root_ratio(1, 0.1)
    with pytest.raises(DomainError):
        first_root_ratio(3, 0.7)  # above (q-1)/q
