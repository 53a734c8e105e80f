"""Group layer: cyclic groups, finite fields, characters, shells."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scheme_spectra import (
    BadLabel,
    Composition,
    CycInt,
    CyclicGroup,
    DivisibilityError,
    DomainError,
    FiniteField,
    SpecMismatch,
    all_words,
    binom,
    char_value,
    comp,
    cyclic,
    enumerate_compositions,
    enumerate_shell,
    finite_field,
    multinom,
    shell_size,
    weight,
    word_add,
    word_char_value,
    word_index,
    word_neg,
    index_word,
)
from scheme_spectra.groups import default_modulus

ALL_GROUPS = [cyclic(q) for q in (2, 3, 4, 5, 6, 8)] + [
    finite_field(q) for q in (2, 3, 4, 5, 8, 9)
]


# ---------------------------------------------------------------------------
# Composition labels


def test_balanced_composition():
    assert tuple(Composition.balanced(3, 9)) == (3, 3, 3)
    assert Composition.balanced(2, 4).n == 4
    with pytest.raises(DivisibilityError):
        Composition.balanced(3, 7)


def test_composition_rejects_negative_counts():
    with pytest.raises(BadLabel):
        Composition((2, -1, 1))


def test_cyclic_shifts():
    c = Composition((3, 1, 0, 0, 1))
    assert tuple(c.shift_left()) == (1, 0, 0, 1, 3)
    shifts = {tuple(s) for s in c.cyclic_shifts()}
    assert shifts == {
        (3, 1, 0, 0, 1),
        (1, 0, 0, 1, 3),
        (0, 0, 1, 3, 1),
        (0, 1, 3, 1, 0),
        (1, 3, 1, 0, 0),
    }


def test_negation_closure():
    g3 = cyclic(3)
    assert g3.is_negation_closed(Composition((1, 1, 1)))
    assert not g3.is_negation_closed(Composition((0, 2, 1)))
    g2 = cyclic(2)
    assert g2.is_negation_closed(Composition((1, 3)))


# ---------------------------------------------------------------------------
# group axioms, for every group we ship


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: str(g.describe()))
def test_additive_group_axioms(group):
    els = list(group.elements())
    assert len(els) == group.order
    for a in els:
        assert group.add(a, 0) == a
        assert group.add(a, group.neg(a)) == 0
        for b in els:
            assert group.add(a, b) == group.add(b, a)


@pytest.mark.parametrize("group", ALL_GROUPS, ids=lambda g: str(g.describe()))
def test_character_table(group):
    """Symmetric, multiplicative in the second slot, rows sum to q*[g==0]."""
    q = group.order
    m = group.char_order
    for g in group.elements():
        for h in group.elements():
            assert group.char_exponent(g, h) == group.char_exponent(h, g)
            val = char_value(group, g, h)
            assert val.order == m
            prod = val
            for h2 in group.elements():
                lhs = char_value(group, g, group.add(h, h2))
                assert lhs == val * char_value(group, g, h2)
            del prod
        row = CycInt.from_int(m, 0)
        for h in group.elements():
            row = row + char_value(group, g, h)
        assert row == (q if g == 0 else 0)


def test_cyclic_char_is_power_of_primitive_root():
    g = cyclic(5)
    z = CycInt.root_of_unity(5)
    for a in range(5):
        for b in range(5):
            assert char_value(g, a, b) == z ** (a * b)


# ---------------------------------------------------------------------------
# finite fields


def test_f4_is_the_unique_quadratic_extension_of_f2():
    # enumerate monic quadratics over F_2 and factor by brute force
    irreducible = []
    for b, c in itertools.product((0, 1), repeat=2):
        # x^2 + b x + c, roots searched in F_2
        if all((r * r + b * r + c) % 2 != 0 for r in (0, 1)):
            irreducible.append((c, b, 1))
    assert irreducible == [(1, 1, 1)]
    assert default_modulus(2, 2) == (1, 1, 1)
    with pytest.raises(SpecMismatch):
        FiniteField(2, 2, (1, 0, 1))  # x^2 + 1 == (x+1)^2 over F_2


def test_f4_arithmetic():
    f4 = finite_field(4)
    # element 2 is x, element 3 is x+1, with x^2 = x + 1
    assert f4.mul(2, 2) == 3
    assert f4.mul(2, 3) == 1
    assert f4.add(2, 3) == 1
    assert [f4.trace(a) for a in range(4)] == [0, 0, 1, 1]
    assert f4.char_order == 2
    assert char_value(f4, 1, 1) == 1  # trace of 1 vanishes in F_4


def test_f8_supports_both_cubic_moduli():
    fa = finite_field(8, (1, 1, 0, 1))  # x^3 + x + 1
    fb = finite_field(8, (1, 0, 1, 1))  # x^3 + x^2 + 1
    for f in (fa, fb):
        assert f.order == 8 and f.char_order == 2
        nonzero = [a for a in f.elements() if a != 0]
        for a in nonzero:
            assert sorted(f.mul(a, b) for b in nonzero) == nonzero


def test_f9_trace_and_modulus():
    f9 = finite_field(9)
    assert f9.modulus == (1, 0, 1)  # x^2 + 1, since -1 is a non-square mod 3
    assert [f9.trace(a) for a in range(9)] == [0, 2, 1, 0, 2, 1, 0, 2, 1]


def test_field_rejects_bad_sizes_and_moduli():
    with pytest.raises(DomainError):
        finite_field(6)
    with pytest.raises(DomainError):
        finite_field(1)
    with pytest.raises(SpecMismatch):
        FiniteField(2, 3, (1, 0, 0, 2))  # not monic after the leading slot
    with pytest.raises(SpecMismatch):
        FiniteField(2, 3, (1, 1, 1))  # wrong degree


def test_prime_field_matches_cyclic_arithmetic():
    f5, g5 = finite_field(5), cyclic(5)
    for a in range(5):
        for b in range(5):
            assert f5.add(a, b) == g5.add(a, b)
            assert f5.mul(a, b) == g5.mul(a, b)
    # characters agree too: trace is the identity on a prime field
    for a in range(5):
        for b in range(5):
            assert char_value(f5, a, b) == char_value(g5, a, b)


def test_cyclic_rejects_tiny_order():
    with pytest.raises(DomainError):
        CyclicGroup(1)


# ---------------------------------------------------------------------------
# words and shells


def test_word_helpers_roundtrip():
    g = cyclic(3)
    assert word_index(g, (1, 0, 0)) == 9
    assert index_word(g, 5, 3) == (0, 1, 2)
    for idx in range(27):
        assert word_index(g, index_word(g, idx, 3)) == idx
    assert word_add(g, (1, 2, 0), (2, 2, 1)) == (0, 1, 1)
    assert word_neg(g, (1, 2, 0)) == (2, 1, 0)


def test_weight_and_composition():
    g = cyclic(3)
    assert weight((0, 2, 1, 0)) == 2
    c = comp(g, (0, 2, 1, 0, 2))
    assert tuple(c) == (2, 1, 2)


def test_weight_shell_enumeration():
    g = cyclic(3)
    shell = list(enumerate_shell(g, 3, 2))
    assert len(shell) == 4 * binom(3, 2)  # (q-1)^2 * C(3,2)
    assert shell[:4] == [(0, 1, 1), (0, 1, 2), (0, 2, 1), (0, 2, 2)]
    assert shell == sorted(shell)
    assert all(weight(w) == 2 for w in shell)
    assert shell_size(g, 3, 2) == len(shell)


def test_composition_shells_partition_the_cube():
    for group in (cyclic(2), cyclic(3), finite_field(4)):
        n = 3
        seen = []
        for c in enumerate_compositions(group.order, n):
            block = list(enumerate_shell(group, n, c))
            assert len(block) == multinom(n, c)
            assert shell_size(group, n, c) == len(block)
            assert all(tuple(comp(group, w)) == tuple(c) for w in block)
            seen.extend(block)
        assert sorted(seen) == sorted(all_words(group, n))
        assert len(seen) == group.order**n


def test_composition_enumeration_is_colex_sorted():
    got = [tuple(c) for c in enumerate_compositions(3, 3)]
    assert got == [
        (3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0), (2, 0, 1),
        (1, 1, 1), (0, 2, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3),
    ]
    assert got == sorted(got, key=lambda c: c[::-1])
    assert [tuple(c) for c in enumerate_compositions(2, 4)] == [
        (4, 0), (3, 1), (2, 2), (1, 3), (0, 4),
    ]


def test_shell_label_validation():
    g = cyclic(3)
    with pytest.raises(BadLabel):
        list(enumerate_shell(g, 3, 4))  # weight above n
    with pytest.raises(BadLabel):
        list(enumerate_shell(g, 3, (1, 1)))  # wrong number of parts
    with pytest.raises(BadLabel):
        shell_size(g, 3, (4, 0, 0, 0))


@settings(max_examples=80, deadline=None)
@given(
    st.sampled_from([2, 3, 4]),
    st.integers(min_value=1, max_value=4),
    st.data(),
)
def test_word_character_is_multiplicative(q, n, data):
    g = cyclic(q)
    pick = st.tuples(*[st.integers(min_value=0, max_value=q - 1)] * n)
    x = data.draw(pick)
    y = data.draw(pick)
    z = data.draw(pick)
    lhs = word_char_value(g, x, word_add(g, y, z))
    assert lhs == word_char_value(g, x, y) * word_char_value(g, x, z)
