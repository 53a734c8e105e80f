"""Distance and composition graphs on words, and their exact spectra.

A Hamming graph joins words differing in exactly d coordinates; its
composition refinement joins x to y when y - x has a prescribed
occurrence-count vector.  Both are Cayley graphs of the additive group,
so every character shell contributes one eigenvalue, computed here from
Krawtchouk formulas — the dense adjacency matrix is never formed except
inside the deliberately independent oracle checks at the bottom of this
module.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    DivisibilityError,
    DomainError,
    IrrationalEigenvalue,
    NoNegativeEigenvalue,
    NonRealEigenvalue,
    PrecisionEscalationError,
    RangeError,
    SizeExceeded,
)
from .exactnum import DEFAULT_EMBED_BITS, CycInt, binom, multinom
from .groups import (
    Composition,
    GroupSpec,
    comp as word_composition,
    cyclic,
    enumerate_compositions,
    enumerate_shell,
    word_add,
    word_char_value,
)
from .krawtchouk import GenKrawValue, gen_kraw, kraw

#: Precision-escalation schedule: how many times the mantissa doubles.
MAX_PRECISION_DOUBLINGS = 4

#: Vertex-count cap for the dense projector check.
PROJECTOR_MAX_VERTICES = 81


@dataclass(frozen=True)
class HammingGraphSpec:
    """Words of length n over a q-letter alphabet, edges at Hamming distance d."""

    n: int
    q: int
    d: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.q < 2:
            raise DomainError(f"need n >= 1 and q >= 2, got n={self.n}, q={self.q}")
        if not 1 <= self.d <= self.n:
            raise RangeError(f"distance d={self.d} outside 1..{self.n}")

    @property
    def vertex_count(self) -> int:
        return self.q**self.n

    @property
    def degree(self) -> int:
        return (self.q - 1) ** self.d * binom(self.n, self.d)

    def describe(self) -> dict:
        return {"family": "hamming", "n": self.n, "q": self.q, "d": self.d}


@dataclass(frozen=True)
class CompositionGraphSpec:
    """Words over a group alphabet; x -> y is an edge when comp(y - x) = dcomp.

    The graph is undirected exactly when dcomp is negation-closed; the
    balanced case dcomp = (n/q, ..., n/q) is the generalized Hadamard
    graph of the alphabet.
    """

    group: GroupSpec
    n: int
    dcomp: Composition

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"need n >= 1, got n={self.n}")
        counts = tuple(self.dcomp)
        if len(counts) != self.group.order:
            raise DomainError(
                f"dcomp has {len(counts)} parts, group order is {self.group.order}"
            )
        if sum(counts) != self.n:
            raise DomainError(f"dcomp {counts} does not sum to n={self.n}")
        object.__setattr__(self, "dcomp", Composition(counts))

    @property
    def vertex_count(self) -> int:
        return self.group.order**self.n

    @property
    def degree(self) -> int:
        return multinom(self.n, self.dcomp)

    @property
    def undirected(self) -> bool:
        return self.group.is_negation_closed(self.dcomp)

    @property
    def balanced(self) -> bool:
        q = self.group.order
        return self.n % q == 0 and all(c == self.n // q for c in self.dcomp)

    def describe(self) -> dict:
        return {
            "family": "composition",
            "group": self.group.describe(),
            "n": self.n,
            "dcomp": list(self.dcomp),
        }


@dataclass(frozen=True)
class SpectrumEntry:
    """One character shell: its label, eigenvalue, and formal multiplicity."""

    label: int | Composition
    eigenvalue: int | GenKrawValue
    multiplicity: int


@dataclass(frozen=True)
class Spectrum:
    """The full eigenvalue list of a graph, one entry per character shell."""

    graph: HammingGraphSpec | CompositionGraphSpec | None
    entries: tuple[SpectrumEntry, ...]
    regular_degree: int
    vertex_count: int

    def to_json(self) -> dict:
        return {
            "graph": None if self.graph is None else self.graph.describe(),
            "entries": [_entry_json(e) for e in self.entries],
            "degree": str(self.regular_degree),
            "vertices": str(self.vertex_count),
        }


def _entry_json(entry: SpectrumEntry) -> dict:
    label = entry.label if isinstance(entry.label, int) else list(entry.label)
    value = entry.eigenvalue
    if isinstance(value, GenKrawValue):
        if value.certified_integer is not None:
            eig: object = value.certified_integer
        else:
            eig = {"coeffs": list(value.value.coeffs), "order": value.value.order}
    else:
        eig = value
    return {"shell": label, "eigenvalue": eig, "multiplicity": str(entry.multiplicity)}


def _ordered_map(fn: Callable, items: Sequence, threads: int | None):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def hamming_spectrum(spec: HammingGraphSpec, threads: int | None = None) -> Spectrum:
    """Exact spectrum of a Hamming graph: K_d(j) on the weight-j shell.

    Shells are listed by ascending weight; multiplicities are the shell
    sizes (q-1)^j C(n,j).
    """
    n, q, d = spec.n, spec.q, spec.d
    values = _ordered_map(lambda j: kraw(n, q, d, j), range(n + 1), threads)
    entries = tuple(
        SpectrumEntry(j, values[j], (q - 1) ** j * binom(n, j)) for j in range(n + 1)
    )
    return Spectrum(spec, entries, spec.degree, spec.vertex_count)


def composition_spectrum(
    spec: CompositionGraphSpec,
    method: str = "extraction",
    threads: int | None = None,
) -> Spectrum:
    """Exact spectrum of a composition graph, one entry per composition shell.

    Shell labels run in colexicographic order; the eigenvalue on shell j
    is the composition Krawtchouk value of the generating composition
    evaluated at j, and the multiplicity is the shell size.
    """
    group, n, dcomp = spec.group, spec.n, spec.dcomp
    labels = list(enumerate_compositions(group.order, n))
    values = _ordered_map(
        lambda j: gen_kraw(group, n, dcomp, j, method=method), labels, threads
    )
    entries = tuple(
        SpectrumEntry(label, value, multinom(n, label))
        for label, value in zip(labels, values)
    )
    return Spectrum(spec, entries, spec.degree, spec.vertex_count)


# ---------------------------------------------------------------------------
# ordering and bounds


def _entry_value(entry: SpectrumEntry) -> int | CycInt:
    v = entry.eigenvalue
    if isinstance(v, GenKrawValue):
        return v.certified_integer if v.certified_integer is not None else v.value
    return v


def _require_real(value: CycInt) -> None:
    if value.conjugate() != value:
        raise NonRealEigenvalue(
            f"eigenvalue {value!r} is not real; "
            "extremes are only defined for undirected graphs"
        )


def _less_than(a: int | CycInt, b: int | CycInt) -> bool:
    """Exact a < b for real cyclotomic values, escalating precision as needed."""
    if isinstance(a, int) and isinstance(b, int):
        return a < b
    if a == b:
        return False
    ca = a if isinstance(a, CycInt) else None
    cb = b if isinstance(b, CycInt) else None
    bits = DEFAULT_EMBED_BITS
    for _ in range(MAX_PRECISION_DOUBLINGS + 1):
        ea = ca.embed(bits) if ca is not None else None
        eb = cb.embed(bits) if cb is not None else None
        ra, pa = (ea.real, ea.precision) if ea else (float(a), 0.0)
        rb, pb = (eb.real, eb.precision) if eb else (float(b), 0.0)
        margin = 2.0 * (pa + pb)
        if abs(ra - rb) > margin:
            return ra < rb
        bits *= 2
    raise PrecisionEscalationError(
        f"could not separate {a!r} and {b!r} after "
        f"{MAX_PRECISION_DOUBLINGS} precision doublings"
    )


def min_eigenvalue(spectrum: Spectrum) -> tuple[int | CycInt, int | Composition]:
    """The least eigenvalue and the first shell (in entry order) attaining it.

    Integer-certified values compare exactly; irrational real values are
    ordered through embeddings whose precision doubles until the ordering
    is unambiguous.  Non-real values (directed-graph misuse) are refused.
    """
    if not spectrum.entries:
        raise DomainError("empty spectrum")
    values = [_entry_value(e) for e in spectrum.entries]
    for v in values:
        if isinstance(v, CycInt):
            _require_real(v)
    best = 0
    for idx in range(1, len(values)):
        if _less_than(values[idx], values[best]):
            best = idx
    return values[best], spectrum.entries[best].label


def max_eigenvalue(spectrum: Spectrum) -> tuple[int | CycInt, int | Composition]:
    """Largest eigenvalue, found the same way as :func:`min_eigenvalue`."""
    if not spectrum.entries:
        raise DomainError("empty spectrum")
    values = [_entry_value(e) for e in spectrum.entries]
    for v in values:
        if isinstance(v, CycInt):
            _require_real(v)
    best = 0
    for idx in range(1, len(values)):
        if _less_than(values[best], values[idx]):
            best = idx
    return values[best], spectrum.entries[best].label


def hoffman_bound(spectrum: Spectrum) -> Fraction:
    """Spectral lower bound  1 - lambda_max / lambda_min  as an exact rational.

    For the regular graphs built here lambda_max is the degree.  Requires
    a negative least eigenvalue, and that eigenvalue must be a rational
    integer for the result to be exact.
    """
    lam_min, _ = min_eigenvalue(spectrum)
    if isinstance(lam_min, CycInt):
        raise IrrationalEigenvalue(
            f"least eigenvalue {lam_min!r} is irrational; no exact rational bound"
        )
    if lam_min >= 0:
        raise NoNegativeEigenvalue(
            f"least eigenvalue {lam_min} is nonnegative; the bound needs lambda_min < 0"
        )
    return 1 - Fraction(spectrum.regular_degree, lam_min)


def trace_identity_check(spectrum: Spectrum) -> bool:
    """Verify  sum_j m_j lambda_j^2 = (number of vertices) * degree.

    Counts closed walks of length two in two ways; exact in the
    cyclotomic ring, so any corrupted eigenvalue or multiplicity trips it.
    """
    total: int | CycInt = 0
    for entry in spectrum.entries:
        v = _entry_value(entry)
        if isinstance(v, int):
            total = total + entry.multiplicity * v * v
        else:
            total = (v * v) * entry.multiplicity + total
    expected = spectrum.vertex_count * spectrum.regular_degree
    if isinstance(total, CycInt):
        return total == expected
    return total == expected


def multiplicity_ratio(q: int, n: int) -> Fraction:
    """Weight-3 shell's share of the closed-walk budget at the balanced distance.

    At d = (q-1)n/q the least eigenvalue of the Hamming graph has modulus
    degree/((q-1)(n-1)).  If the weight-3 shell carried an eigenvalue of
    that modulus, its contribution to sum_j m_j lambda_j^2 would be
    (q-1)^3 C(n,3) * degree^2 / ((q-1)(n-1))^2, while the trace identity
    caps the whole sum at q^n * degree.  This returns the ratio of the
    two; a value above 1 is a certificate that the shell's formal
    multiplicity cannot fit inside the budget.
    """
    if q < 3:
        raise DomainError(f"the ratio is defined for q >= 3, got q={q}")
    if ((q - 1) * n) % q:
        raise DivisibilityError(f"needs q | (q-1)n, got q={q}, n={n}")
    d = (q - 1) * n // q
    num = (q - 1) ** 3 * binom(n, 3) * (q - 1) ** d * binom(n, d)
    den = q**n * (q - 1) ** 2 * (n - 1) ** 2
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# independent oracles


def eigenvector_check(
    spec: HammingGraphSpec | CompositionGraphSpec,
    x: Sequence[int],
    sample: Iterable[Sequence[int]],
    group: GroupSpec | None = None,
) -> bool:
    """Verify the character of x is an eigenvector by direct adjacency action.

    For every sampled vertex y this sums phi_x over the actual neighbors
    y + s of y and compares, exactly in the cyclotomic ring, against
    lambda_x * phi_x(y) with lambda_x taken from the Krawtchouk formula.
    The two sides come from unrelated code paths on purpose.
    """
    if isinstance(spec, HammingGraphSpec):
        if group is None:
            group = cyclic(spec.q)
        if group.order != spec.q:
            raise DomainError(f"group order {group.order} does not match q={spec.q}")
        shell_label: int | Composition = spec.d
        lam: int | CycInt = kraw(spec.n, spec.q, spec.d, sum(1 for g in x if g))
    else:
        group = spec.group
        shell_label = spec.dcomp
        lam_val = gen_kraw(group, spec.n, spec.dcomp, word_composition(group, x))
        lam = lam_val.certified_integer if lam_val.certified_integer is not None else lam_val.value
    m = group.char_order
    x = tuple(x)
    shell = list(enumerate_shell(group, spec.n, shell_label))
    for y in sample:
        y = tuple(y)
        counts = [0] * m
        for s in shell:
            e = 0
            for a, b in zip(x, word_add(group, y, s)):
                e += group.char_exponent(a, b)
            counts[e % m] += 1
        lhs = CycInt.from_root_powers(m, counts)
        rhs = word_char_value(group, x, y) * lam
        if lhs != rhs:
            return False
    return True


def projector_identity_check(n: int, q: int) -> bool:
    """Dense check that the Krawtchouk projectors resolve the identity.

    Builds E_j with entries K_j(Hamming weight of x - y) / q^n for every
    shell j and verifies sum_j E_j = I and E_j E_l = [j = l] E_j, using
    integer matrices scaled by q^n so every comparison is exact.
    """
    if q**n > PROJECTOR_MAX_VERTICES:
        raise SizeExceeded(
            f"dense projector check is capped at q^n <= {PROJECTOR_MAX_VERTICES}, "
            f"got {q**n}"
        )
    size = q**n
    digits = np.empty((size, n), dtype=np.int64)
    idx = np.arange(size)
    for k in range(n - 1, -1, -1):
        digits[:, k] = idx % q
        idx = idx // q
    diff = digits[:, None, :] != digits[None, :, :]
    w = diff.sum(axis=2)
    ktab = np.array([[kraw(n, q, j, i) for i in range(n + 1)] for j in range(n + 1)], dtype=np.int64)
    scaled = [ktab[j][w] for j in range(n + 1)]
    ident = size * np.eye(size, dtype=np.int64)
    if not np.array_equal(sum(scaled), ident):
        return False
    for j in range(n + 1):
        for l in range(j, n + 1):
            prod = scaled[j] @ scaled[l]
            expect = size * scaled[j] if j == l else np.zeros_like(prod)
            if not np.array_equal(prod, expect):
                return False
    return True
