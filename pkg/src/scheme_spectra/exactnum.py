"""Exact arithmetic underneath all character-sum computations.

Unbounded integers are plain Python ``int`` and exact rationals are
``fractions.Fraction``; the standard library already makes both exact, so
this module only supplies what it lacks: the ring of cyclotomic integers
Z[zeta_m] with a canonical normal form, a complex embedding carrying a
declared error bound, and the handful of counting functions the rest of
the library leans on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

from .errors import DomainError, OrderMismatch, SumMismatch

#: Default mantissa size (bits) for complex embeddings.
DEFAULT_EMBED_BITS = 80

# Declared per-operation rounding error at the default mantissa size.  The
# true 80-bit error is far smaller; the declared bound is deliberately
# conservative and scales by 2**(80 - bits) when precision is raised.
_PER_OP_ERROR = 1e-12


def _exact_poly_div(num: list[int], den: Sequence[int]) -> list[int]:
    # Long division by a monic integer polynomial; remainder must vanish.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for top in range(len(num) - 1, dd - 1, -1):
        c = num[top]
        out[top - dd] = c
        if c:
            for k in range(dd + 1):
                num[top - dd + k] -= c * den[k]
    if any(num):
        raise ArithmeticError("division is not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, constant first.

    Computed by dividing x^m - 1 by the cyclotomic polynomials of the
    proper divisors of m; every quotient along the way is exact.
    """
    if m < 1:
        raise DomainError(f"cyclotomic polynomial needs m >= 1, got {m}")
    if m == 1:
        return (-1, 1)
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_poly_div(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(m: int) -> tuple[tuple[int, ...], ...]:
    # rows[r] = coefficients of x^r reduced modulo the m-th cyclotomic
    # polynomial.  Enough rows for any product of two reduced elements.
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    row = [1] + [0] * (deg - 1)
    for _ in range(max(2 * deg - 1, m)):
        rows.append(tuple(row))
        carry = row[deg - 1]
        row = [0] + row[: deg - 1]
        if carry:
            row = [row[k] - carry * phi[k] for k in range(deg)]
    return tuple(rows)


class CycInt:
    """A cyclotomic integer: an element of Z[zeta_m] in canonical form.

    The canonical form is the residue in the power basis
    1, zeta, ..., zeta^(deg-1) modulo the m-th cyclotomic polynomial, so
    equality of coefficient vectors is equality in the ring.  Instances
    are immutable; arithmetic returns new values and mixes freely with
    plain ``int``.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()):  # noqa: D107
        if order < 1:
            raise DomainError(f"root order must be >= 1, got {order}")
        rows = _reduction_rows(order)
        deg = len(rows[0])
        folded = [0] * order
        for e, c in enumerate(coeffs):
            if c:
                folded[e % order] += c
        acc = [0] * deg
        for e, c in enumerate(folded):
            if c:
                row = rows[e]
                for k in range(deg):
                    acc[k] += c * row[k]
        self._order = order
        self._coeffs = tuple(acc)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, order: int, value: int) -> CycInt:
        return cls(order, (value,))

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> CycInt:
        """zeta_m^power as a canonical ring element."""
        out = cls.__new__(cls)
        rows = _reduction_rows(order)
        out._order = order
        out._coeffs = rows[power % order]
        return out

    @classmethod
    def from_root_powers(cls, order: int, counts: Sequence[int]) -> CycInt:
        """The sum  counts[e] * zeta_m^e  over all listed exponents."""
        return cls(order, counts)

    # -- structure ----------------------------------------------------

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def as_integer(self) -> int | None:
        """The value as a plain int when it lies in Z, else None."""
        if any(self._coeffs[1:]):
            return None
        return self._coeffs[0]

    def conjugate(self) -> CycInt:
        """Complex conjugate (the Galois map zeta -> zeta^(-1))."""
        m = self._order
        counts = [0] * m
        for i, c in enumerate(self._coeffs):
            if c:
                counts[(m - i) % m] += c
        return CycInt(m, counts)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other: object) -> CycInt | None:
        if isinstance(other, CycInt):
            if other._order != self._order:
                raise OrderMismatch(
                    f"root orders differ: {self._order} vs {other._order}"
                )
            return other
        if isinstance(other, int):
            return CycInt.from_int(self._order, other)
        return None

    def __add__(self, other: CycInt | int) -> CycInt:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        out = CycInt.__new__(CycInt)
        out._order = self._order
        out._coeffs = tuple(a + b for a, b in zip(self._coeffs, rhs._coeffs))
        return out

    __radd__ = __add__

    def __neg__(self) -> CycInt:
        out = CycInt.__new__(CycInt)
        out._order = self._order
        out._coeffs = tuple(-a for a in self._coeffs)
        return out

    def __sub__(self, other: CycInt | int) -> CycInt:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int) -> CycInt:
        return (-self) + other

    def __mul__(self, other: CycInt | int) -> CycInt:
        if isinstance(other, int):
            out = CycInt.__new__(CycInt)
            out._order = self._order
            out._coeffs = tuple(a * other for a in self._coeffs)
            return out
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self._coeffs, rhs._coeffs
        conv = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycInt(self._order, conv)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> CycInt:
        if exponent < 0:
            raise DomainError("negative powers leave the ring of integers")
        result = CycInt.from_int(self._order, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.as_integer() == other
        if isinstance(other, CycInt):
            if self._order == other._order:
                return self._coeffs == other._coeffs
            a, b = self.as_integer(), other.as_integer()
            return a is not None and a == b
        return NotImplemented

    def __hash__(self) -> int:
        n = self.as_integer()
        if n is not None:
            return hash(n)
        return hash((self._order, self._coeffs))

    def __repr__(self) -> str:
        return f"CycInt(order={self._order}, coeffs={self._coeffs})"

    def to_term_string(self) -> str:
        """Canonical text form ``a0+a1*z+a2*z^2+...`` with every coefficient."""
        parts = [str(self._coeffs[0])]
        for i, c in enumerate(self._coeffs[1:], start=1):
            parts.append(f"{c:+d}*z" if i == 1 else f"{c:+d}*z^{i}")
        return "".join(parts)

    # -- embedding ----------------------------------------------------

    def embed(self, bits: int = DEFAULT_EMBED_BITS) -> ComplexApprox:
        """Numerical value at zeta_m = exp(2*pi*i/m), with a declared bound.

        The ``precision`` field of the result bounds the distance to the
        true complex value; it shrinks as ``bits`` grows.
        """
        m = self._order
        with mpmath.workprec(bits):
            total = mpmath.mpc(0)
            for i, c in enumerate(self._coeffs):
                if c:
                    total += c * mpmath.expjpi(mpmath.mpf(2 * i) / m)
            re = float(total.real)
            im = float(total.imag)
        scale = sum(abs(c) for c in self._coeffs) + 1
        declared = (len(self._coeffs) + 1) * scale * _PER_OP_ERROR
        declared *= 2.0 ** (DEFAULT_EMBED_BITS - bits)
        return ComplexApprox(re, im, declared)


@dataclass(frozen=True)
class ComplexApprox:
    """A complex value together with a declared absolute error bound."""

    real: float
    imag: float
    precision: float


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the usual out-of-range convention."""
    if n < 0:
        raise DomainError(f"binom needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinom(n: int, parts: Iterable[int]) -> int:
    """Multinomial coefficient n! / (parts[0]! * parts[1]! * ...).

    Raises SumMismatch unless the parts are nonnegative and sum to n.
    """
    counts = list(parts)
    if any(c < 0 for c in counts):
        raise SumMismatch(f"negative part in {counts}")
    if sum(counts) != n:
        raise SumMismatch(f"parts {counts} sum to {sum(counts)}, expected {n}")
    result = math.factorial(n)
    for c in counts:
        result //= math.factorial(c)
    return result


def entropy_q(q: int, x: float) -> float:
    """q-ary entropy  x*log_q(q-1) - x*log_q(x) - (1-x)*log_q(1-x).

    Defined on [0, (q-1)/q] with the endpoint conventions h(0) = 0 and
    h((q-1)/q) = 1 returned exactly.
    """
    if q < 2:
        raise DomainError(f"entropy_q needs q >= 2, got {q}")
    top = Fraction(q - 1, q)
    if x < 0 or x > top:
        raise DomainError(f"entropy_q argument {x} outside [0, {top}]")
    if x == 0:
        return 0.0
    if x == top:
        return 1.0
    x = float(x)
    value = -x * math.log(x, q) - (1.0 - x) * math.log(1.0 - x, q)
    if q > 2:
        value += x * math.log(q - 1, q)
    return value
