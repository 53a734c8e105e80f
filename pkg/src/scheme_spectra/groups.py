"""Finite abelian alphabets and their additive characters.

Two families are supported: integers modulo q and finite fields of prime
power order.  Elements are handled as indices 0..q-1 (field elements are
indexed by the base-p value of their coefficient vector), words over the
alphabet are plain tuples of indices, and a word's composition counts how
often each element occurs.  Characters take values in the cyclotomic
integers of order q (cyclic case) or of the characteristic p (field case).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import BadLabel, DivisibilityError, DomainError, SpecMismatch, SumMismatch
from .exactnum import CycInt


@dataclass(frozen=True)
class Composition:
    """How many times each of the q alphabet elements occurs in a word."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise BadLabel(f"negative count in composition {self.counts}")

    @classmethod
    def balanced(cls, q: int, n: int) -> Composition:
        """The composition (n/q, ..., n/q); requires q to divide n."""
        if n % q:
            raise DivisibilityError(f"balanced composition needs q | n, got q={q}, n={n}")
        return cls((n // q,) * q)

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def q(self) -> int:
        return len(self.counts)

    def shift_left(self, steps: int = 1) -> Composition:
        """Cyclically rotate the counts left by ``steps`` positions."""
        q = len(self.counts)
        s = steps % q
        return Composition(self.counts[s:] + self.counts[:s])

    def cyclic_shifts(self) -> list[Composition]:
        return [self.shift_left(s) for s in range(len(self.counts))]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, idx: int) -> int:
        return self.counts[idx]


class GroupSpec:
    """Shared interface of the supported alphabets."""

    order: int
    char_order: int

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        raise NotImplementedError

    def neg(self, a: int) -> int:
        raise NotImplementedError

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def char_exponent(self, g: int, h: int) -> int:
        """Exponent e with  phi_g(h) = zeta^e,  zeta of order ``char_order``."""
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def _check_element(self, g: int) -> None:
        if not isinstance(g, int) or not 0 <= g < self.order:
            raise SpecMismatch(f"{g!r} is not an element index of {self!r}")

    def is_negation_closed(self, comp: Composition | Sequence[int]) -> bool:
        """Whether a generating composition is stable under negation."""
        counts = tuple(comp)
        if len(counts) != self.order:
            raise BadLabel(
                f"composition has {len(counts)} parts, group has order {self.order}"
            )
        return all(counts[g] == counts[self.neg(g)] for g in self.elements())


@dataclass(frozen=True)
class CyclicGroup(GroupSpec):
    """Integers modulo q under addition."""

    q: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise DomainError(f"cyclic group needs q >= 2, got {self.q}")

    @property
    def order(self) -> int:
        return self.q

    @property
    def char_order(self) -> int:
        return self.q

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def char_exponent(self, g: int, h: int) -> int:
        return (g * h) % self.q

    def describe(self) -> dict:
        return {"kind": "cyclic", "q": self.q}


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    # Multiply two coefficient vectors over Z_p and reduce by the monic modulus.
    k = len(modulus) - 1
    conv = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                conv[i + j] = (conv[i + j] + ai * bj) % p
    for top in range(len(conv) - 1, k - 1, -1):
        c = conv[top]
        if c:
            conv[top] = 0
            for t in range(k):
                conv[top - k + t] = (conv[top - k + t] - c * modulus[t]) % p
    out = conv[:k]
    out += [0] * (k - len(out))
    return tuple(out)


def _poly_rem(f: Sequence[int], g: Sequence[int], p: int) -> tuple[int, ...]:
    # Remainder of f by monic g over Z_p.
    r = [c % p for c in f]
    dg = len(g) - 1
    while len(r) - 1 >= dg:
        c = r[-1]
        if c:
            for t in range(dg + 1):
                r[len(r) - 1 - dg + t] = (r[len(r) - 1 - dg + t] - c * g[t]) % p
        r.pop()
    return tuple(r)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    k = len(f) - 1
    if k == 1:
        return True
    for deg in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            g = (*tail, 1)
            if not any(_poly_rem(f, g, p)):
                return False
    return True


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    t = 2
    while t * t <= p:
        if p % t == 0:
            return False
        t += 1
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k over Z_p.

    Candidates are compared coefficient-wise from the constant term up.
    """
    for tail in itertools.product(range(p), repeat=k):
        f = (*tail, 1)
        if _is_irreducible(f, p):
            return f
    raise DomainError(f"no irreducible polynomial of degree {k} over Z_{p}")


@dataclass(frozen=True)
class FiniteField(GroupSpec):
    """The additive group of GF(p^k), with field structure for characters.

    ``modulus`` is the monic irreducible polynomial defining the field,
    stored constant term first (length k+1).  Element i stands for the
    polynomial whose Z_p coefficient vector is the base-p expansion of i.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise DomainError(f"field characteristic must be prime, got {self.p}")
        if not self.modulus or self.modulus[-1] % self.p != 1:
            raise SpecMismatch(f"modulus {self.modulus} is not monic over Z_{self.p}")
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))
        if self.k < 1:
            raise DomainError(f"field extension degree must be >= 1, got {self.k}")
        if len(self.modulus) != self.k + 1:
            raise SpecMismatch(
                f"modulus degree {len(self.modulus) - 1} does not match k={self.k}"
            )
        if not _is_irreducible(self.modulus, self.p):
            raise SpecMismatch(f"modulus {self.modulus} is reducible over Z_{self.p}")

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def char_order(self) -> int:
        return self.p

    def _vec(self, a: int) -> tuple[int, ...]:
        digits = []
        for _ in range(self.k):
            digits.append(a % self.p)
            a //= self.p
        return tuple(digits)

    def _idx(self, vec: Sequence[int]) -> int:
        out = 0
        for c in reversed(vec):
            out = out * self.p + c
        return out

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        q = self.order
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            va = self._vec(a)
            for b in range(a, q):
                prod = self._idx(_poly_mul_mod(va, self._vec(b), self.modulus, self.p))
                table[a][b] = prod
                table[b][a] = prod
        return table

    @cached_property
    def _trace_table(self) -> list[int]:
        # Tr(a) = a + a^p + ... + a^(p^(k-1)), landing in the prime subfield.
        out = []
        for a in range(self.order):
            acc = 0
            term = a
            for _ in range(self.k):
                acc = self.add(acc, term)
                frob = term
                for _ in range(self.p - 1):
                    frob = self._mul_table[frob][term]
                term = frob
            vec = self._vec(acc)
            if any(vec[1:]):
                raise ArithmeticError(f"trace of element {a} left the prime subfield")
            out.append(vec[0])
        return out

    def add(self, a: int, b: int) -> int:
        va, vb = self._vec(a), self._vec(b)
        return self._idx(tuple((x + y) % self.p for x, y in zip(va, vb)))

    def neg(self, a: int) -> int:
        return self._idx(tuple((-x) % self.p for x in self._vec(a)))

    def mul(self, a: int, b: int) -> int:
        return self._mul_table[a][b]

    def trace(self, a: int) -> int:
        """Absolute trace down to Z_p, returned as an integer in 0..p-1."""
        self._check_element(a)
        return self._trace_table[a]

    def char_exponent(self, g: int, h: int) -> int:
        return self._trace_table[self._mul_table[g][h]]

    def describe(self) -> dict:
        return {
            "kind": "field",
            "p": self.p,
            "k": self.k,
            "q": self.order,
            "modulus": list(self.modulus),
        }


def cyclic(q: int) -> CyclicGroup:
    return CyclicGroup(q)


def finite_field(q: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """GF(q) for a prime power q; the modulus defaults to the canonical one."""
    if q < 2:
        raise DomainError(f"field order must be >= 2, got {q}")
    p = 2
    while q % p:
        p += 1
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise DomainError(f"{q} is not a prime power")
    if modulus is None:
        modulus = default_modulus(p, k)
    return FiniteField(p, k, tuple(modulus))


# ---------------------------------------------------------------------------
# words


def weight(word: Sequence[int]) -> int:
    """Number of nonzero coordinates."""
    return sum(1 for g in word if g)


def comp(group: GroupSpec, word: Sequence[int]) -> Composition:
    """The composition of a word: per-element occurrence counts."""
    counts = [0] * group.order
    for g in word:
        group._check_element(g)
        counts[g] += 1
    return Composition(tuple(counts))


def word_add(group: GroupSpec, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    if len(x) != len(y):
        raise SpecMismatch(f"word lengths differ: {len(x)} vs {len(y)}")
    return tuple(group.add(a, b) for a, b in zip(x, y))


def word_neg(group: GroupSpec, x: Sequence[int]) -> tuple[int, ...]:
    return tuple(group.neg(a) for a in x)


def word_sub(group: GroupSpec, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
    return word_add(group, x, word_neg(group, y))


def word_index(group: GroupSpec, word: Sequence[int]) -> int:
    """Canonical row index: the base-q value of the word, first digit high."""
    out = 0
    for g in word:
        out = out * group.order + g
    return out


def index_word(group: GroupSpec, index: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        digits.append(index % group.order)
        index //= group.order
    return tuple(reversed(digits))


def all_words(group: GroupSpec, n: int) -> Iterator[tuple[int, ...]]:
    """Every word of length n in canonical (base-q ascending) order."""
    return itertools.product(group.elements(), repeat=n)


# ---------------------------------------------------------------------------
# characters


def char_value(group: GroupSpec, g: int, h: int) -> CycInt:
    """The additive character of ``g`` evaluated at ``h``.

    For Z_q this is zeta_q^(g*h); for GF(p^k) it is zeta_p^Tr(g*h).  The
    value is symmetric in its two arguments and multiplicative in each.
    """
    group._check_element(g)
    group._check_element(h)
    return CycInt.root_of_unity(group.char_order, group.char_exponent(g, h))


def word_char_exponent(group: GroupSpec, x: Sequence[int], y: Sequence[int]) -> int:
    """Exponent e with  phi_x(y) = zeta^e  for words x, y of equal length."""
    if len(x) != len(y):
        raise SpecMismatch(f"word lengths differ: {len(x)} vs {len(y)}")
    e = 0
    for a, b in zip(x, y):
        e += group.char_exponent(a, b)
    return e % group.char_order


def word_char_value(group: GroupSpec, x: Sequence[int], y: Sequence[int]) -> CycInt:
    return CycInt.root_of_unity(group.char_order, word_char_exponent(group, x, y))


# ---------------------------------------------------------------------------
# shells and compositions


def _weight_words(q: int, n: int, w: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    remaining = n - len(prefix)
    for g in range(q):
        nw = w - (1 if g else 0)
        if nw < 0 or nw > remaining - 1:
            continue
        prefix.append(g)
        yield from _weight_words(q, n, nw, prefix)
        prefix.pop()


def _comp_words(q: int, n: int, remaining: list[int], prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for g in range(q):
        if remaining[g]:
            remaining[g] -= 1
            prefix.append(g)
            yield from _comp_words(q, n, remaining, prefix)
            prefix.pop()
            remaining[g] += 1


def enumerate_shell(
    group: GroupSpec, n: int, label: int | Composition | Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """Stream the words of a weight or composition shell in canonical order.

    An integer label selects the Hamming sphere of that weight; a
    composition label selects the words with exactly those occurrence
    counts.  Words are produced in ascending base-q order and never
    materialized all at once.
    """
    q = group.order
    if isinstance(label, int):
        if not 0 <= label <= n:
            raise BadLabel(f"weight {label} outside 0..{n}")
        return _weight_words(q, n, label, [])
    counts = tuple(label)
    if len(counts) != q:
        raise BadLabel(f"composition has {len(counts)} parts, expected {q}")
    if any(c < 0 for c in counts):
        raise BadLabel(f"negative count in {counts}")
    if sum(counts) != n:
        raise BadLabel(f"composition {counts} sums to {sum(counts)}, expected {n}")
    return _comp_words(q, n, list(counts), [])


def enumerate_compositions(q: int, n: int) -> Iterator[Composition]:
    """All compositions of n into q ordered parts, colexicographically.

    Colexicographic order compares the last differing coordinate, so the
    stream starts at (n, 0, ..., 0) and ends at (0, ..., 0, n).
    """
    if q < 1:
        raise BadLabel(f"need at least one part, got q={q}")

    def rec(parts: int, total: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for last in range(total + 1):
            for head in rec(parts - 1, total - last):
                yield head + (last,)

    return (Composition(t) for t in rec(q, n))


def composition_count(q: int, n: int) -> int:
    from .exactnum import binom

    return binom(n + q - 1, q - 1)


def shell_size(group: GroupSpec, n: int, label: int | Composition | Sequence[int]) -> int:
    """Cardinality of a shell, computed by counting formulas."""
    from .exactnum import binom, multinom

    q = group.order
    if isinstance(label, int):
        if not 0 <= label <= n:
            raise BadLabel(f"weight {label} outside 0..{n}")
        return (q - 1) ** label * binom(n, label)
    counts = tuple(label)
    try:
        return multinom(n, counts)
    except SumMismatch as exc:
        raise BadLabel(str(exc)) from exc
