"""Krawtchouk polynomials, classical and composition-refined.

The classical value K_i(j) is the eigenvalue of the distance-d Hamming
graph on the weight-j character shell.  Its composition refinement
replaces weights by full occurrence-count vectors and takes values in a
cyclotomic integer ring; three independent routes to it are provided
(direct character sums, coefficient extraction from a product of linear
forms, and — for balanced generators over Z_q — extraction from a power
of a circulant determinant), which is what makes cross-checking possible.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DivisibilityError,
    DomainError,
    NotFound,
    RangeError,
    SumMismatch,
    UnsupportedSize,
)
from .exactnum import CycInt, binom, multinom
from .groups import Composition, GroupSpec, enumerate_shell

#: Largest alphabet for which the circulant determinant is expanded exactly.
CIRCULANT_MAX_Q = 7


def kraw(n: int, q: int, i: int, j: int) -> int:
    """Classical Krawtchouk value  sum_k (-1)^k (q-1)^(i-k) C(j,k) C(n-j,i-k)."""
    if n < 1 or q < 2:
        raise DomainError(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    if not (0 <= i <= n and 0 <= j <= n):
        raise RangeError(f"indices i={i}, j={j} outside 0..{n}")
    total = 0
    for k in range(0, i + 1):
        c = binom(j, k) * binom(n - j, i - k)
        if c:
            total += (-1) ** k * (q - 1) ** (i - k) * c
    return total


def first_nonpositive(n: int, q: int, d: int) -> int:
    """Smallest shell index j >= 1 with K_d(j) <= 0.

    For d >= 1 the row-sum identity guarantees a sign change, so the scan
    cannot run off the end; NotFound guards the degenerate d = 0 case.
    """
    for j in range(1, n + 1):
        if kraw(n, q, d, j) <= 0:
            return j
    raise NotFound(f"K_{d} stays positive on 1..{n} for n={n}, q={q}")


def first_root_ratio(q: int, delta: float) -> float:
    """Large-n limit of (first Krawtchouk root)/n at degree delta*n.

    A float diagnostic only; all bound bookkeeping elsewhere is exact.
    """
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    if delta < 0 or delta > Fraction(q - 1, q):
        raise DomainError(f"delta must lie in [0, {q - 1}/{q}], got {delta}")
    delta = float(delta)
    return (q - 1 - (q - 2) * delta - 2.0 * math.sqrt((q - 1) * delta * (1.0 - delta))) / q


@dataclass(frozen=True)
class GenKrawValue:
    """A composition Krawtchouk value with its integer certification.

    ``certified_integer`` is the plain-int value when the cyclotomic
    canonical form happens to be rational, and None otherwise.
    """

    value: CycInt
    certified_integer: int | None

    @classmethod
    def from_cyc(cls, value: CycInt) -> GenKrawValue:
        return cls(value, value.as_integer())

    def expect_integer(self) -> int:
        if self.certified_integer is None:
            raise ArithmeticError(f"value {self.value!r} is not a rational integer")
        return self.certified_integer


def _validate_pair(group: GroupSpec, n: int, i: Composition, j: Composition) -> None:
    for label, name in ((i, "i"), (j, "j")):
        counts = tuple(label)
        if len(counts) != group.order:
            raise SumMismatch(
                f"composition {name}={counts} has {len(counts)} parts, "
                f"group order is {group.order}"
            )
        if sum(counts) != n:
            raise SumMismatch(f"composition {name}={counts} does not sum to n={n}")


def _canonical_word(j: Composition | tuple) -> tuple[int, ...]:
    word: list[int] = []
    for g, c in enumerate(tuple(j)):
        word.extend([g] * c)
    return tuple(word)


def _gen_kraw_brute(group: GroupSpec, n: int, i: Composition, j: Composition) -> CycInt:
    m = group.char_order
    x = _canonical_word(j)
    exps = [[group.char_exponent(g, h) for h in group.elements()] for g in group.elements()]
    counts = [0] * m
    for y in enumerate_shell(group, n, i):
        e = 0
        for a, b in zip(x, y):
            e += exps[a][b]
        counts[e % m] += 1
    return CycInt.from_root_powers(m, counts)


def _gen_kraw_extraction(group: GroupSpec, n: int, i: Composition, j: Composition) -> CycInt:
    # Coefficient of z^i in prod_h (sum_g phi_h(g) z_g)^(j_h).  States live
    # in the group ring Z[Z_m] (length-m count vectors), where multiplying
    # by a root of unity is a cyclic shift; reduction happens only once.
    m = group.char_order
    q = group.order
    target = tuple(i)
    exps = [[group.char_exponent(g, h) for h in group.elements()] for g in group.elements()]
    zero_part = (0,) * q
    start = [0] * m
    start[0] = 1
    states: dict[tuple[int, ...], list[int]] = {zero_part: start}
    for h, copies in enumerate(tuple(j)):
        row = exps[h]
        for _ in range(copies):
            nxt: dict[tuple[int, ...], list[int]] = {}
            for part, vec in states.items():
                for g in range(q):
                    if part[g] >= target[g]:
                        continue
                    npart = part[:g] + (part[g] + 1,) + part[g + 1 :]
                    e = row[g]
                    dest = nxt.get(npart)
                    if dest is None:
                        dest = [0] * m
                        nxt[npart] = dest
                    for idx in range(m):
                        c = vec[idx]
                        if c:
                            dest[(idx + e) % m] += c
            states = nxt
    final = states.get(target)
    if final is None:
        return CycInt(m)
    return CycInt.from_root_powers(m, final)


def gen_kraw(
    group: GroupSpec,
    n: int,
    i: Composition,
    j: Composition,
    method: str = "extraction",
) -> GenKrawValue:
    """Composition Krawtchouk value K_i(j) over the given alphabet.

    This is the eigenvalue, on the character shell of composition j, of
    the graph whose edges shift a word by the composition-i sphere.
    Equivalently: the sum of phi_x(y) over all y of composition i, for
    any fixed x of composition j — independence from the choice of x is
    one of the tested invariants.

    ``method`` selects the route: "brute" walks the shell and sums
    characters; "extraction" (default) reads the coefficient of z^i off
    a product of linear forms without touching the shell.
    """
    _validate_pair(group, n, i, j)
    if method == "brute":
        value = _gen_kraw_brute(group, n, i, j)
    elif method == "extraction":
        value = _gen_kraw_extraction(group, n, i, j)
    else:
        raise DomainError(f"unknown method {method!r}")
    return GenKrawValue.from_cyc(value)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        t = start
        while not seen[t]:
            seen[t] = True
            t = perm[t]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _circulant_determinant(q: int) -> dict[tuple[int, ...], int]:
    # det of the q x q circulant (z_(j-i mod q)) as a polynomial in
    # z_0..z_(q-1); exponent vectors map to integer coefficients.
    out: dict[tuple[int, ...], int] = {}
    for perm in itertools.permutations(range(q)):
        expo = [0] * q
        for row, col in enumerate(perm):
            expo[(col - row) % q] += 1
        key = tuple(expo)
        out[key] = out.get(key, 0) + _perm_sign(perm)
    return {k: v for k, v in out.items() if v}


def gen_kraw_circulant(q: int, n: int, r: Composition) -> int:
    """Balanced composition Krawtchouk value over Z_q via the circulant route.

    Computes K_(n/q,...,n/q)(r) by extracting the z^r coefficient of
    det(C)^(n/q) for the circulant C of the z variables and rescaling by
    the multinomial ratio.  Exact and fully independent of the
    character-sum routes; the alphabet is capped because the determinant
    is expanded as a sum over permutations.
    """
    if q < 2:
        raise DomainError(f"need q >= 2, got {q}")
    if q > CIRCULANT_MAX_Q:
        raise UnsupportedSize(
            f"circulant determinant expansion is capped at q = {CIRCULANT_MAX_Q}, got q = {q}"
        )
    if n % q:
        raise DivisibilityError(f"balanced generator needs q | n, got q={q}, n={n}")
    target = tuple(r)
    if len(target) != q:
        raise SumMismatch(f"composition {target} has {len(target)} parts, expected {q}")
    if sum(target) != n:
        raise SumMismatch(f"composition {target} does not sum to n={n}")

    det = _circulant_determinant(q)
    states: dict[tuple[int, ...], int] = {(0,) * q: 1}
    for _ in range(n // q):
        nxt: dict[tuple[int, ...], int] = {}
        for part, coeff in states.items():
            for mono, c in det.items():
                npart = tuple(a + b for a, b in zip(part, mono))
                if any(a > t for a, t in zip(npart, target)):
                    continue
                nxt[npart] = nxt.get(npart, 0) + coeff * c
        states = {k: v for k, v in nxt.items() if v}
    extracted = states.get(target, 0)
    scale_num = multinom(n, Composition.balanced(q, n))
    scale_den = multinom(n, target)
    value = extracted * scale_num
    if value % scale_den:
        raise ArithmeticError(
            f"reciprocity scaling is not integral for q={q}, n={n}, r={target}"
        )
    return value // scale_den


def zero_shell_predicate(q: int, r: Composition | tuple) -> bool:
    """True when sum_g g*r_g is nonzero mod q, forcing a zero balanced value."""
    counts = tuple(r)
    return sum(g * c for g, c in enumerate(counts)) % q != 0
