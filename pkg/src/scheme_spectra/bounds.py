"""Orthogonal representations and the bounds they certify.

An orthogonal representation of a graph assigns each vertex a complex
vector with unit-modulus entries so that adjacent vertices get orthogonal
vectors; its dimension upper-bounds the quantum chromatic number, while
the Hoffman-type spectral quantity bounds it from below.  Everything here
is exact: representations store roots of unity by their exponents, inner
products are evaluated in the cyclotomic ring, and the only floats in
sight are clearly-labeled diagnostics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import IO

import numpy as np

from .errors import (
    DivisibilityError,
    DomainError,
    Infeasible,
    IrrationalEigenvalue,
    NoNegativeEigenvalue,
    NonRealEigenvalue,
    NotOrthogonal,
    NotUnitModulus,
    SizeExceeded,
    SpecMismatch,
    UnsupportedSize,
)
from .exactnum import CycInt, binom, entropy_q, multinom, _reduction_rows
from .groups import (
    Composition,
    GroupSpec,
    cyclic,
    enumerate_shell,
    index_word,
)
from .krawtchouk import first_nonpositive, first_root_ratio, kraw
from .schemes import (
    CompositionGraphSpec,
    HammingGraphSpec,
    composition_spectrum,
    hamming_spectrum,
    hoffman_bound,
    min_eigenvalue,
)

#: Row-count cap for materializing a representation.
REPRESENTATION_MAX_ROWS = 1 << 20

#: Support-size cap for the exhaustive LP search.
LP_SEARCH_MAX_SUPPORT = 3


# ---------------------------------------------------------------------------
# LP certificates


@dataclass(frozen=True)
class LPSolution:
    """Nonnegative integer weights c_0..c_n on the character shells.

    Feasibility means the weighted Krawtchouk column at the graph
    distance vanishes while the total weight is positive; the objective
    (the weighted sum of shell sizes) is then the dimension of the
    orthogonal representation the solution assembles.
    """

    n: int
    q: int
    d: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if len(self.coefficients) != self.n + 1:
            raise DomainError(
                f"need n+1 = {self.n + 1} coefficients, got {len(self.coefficients)}"
            )

    @property
    def objective(self) -> int:
        return sum(
            c * (self.q - 1) ** i * binom(self.n, i)
            for i, c in enumerate(self.coefficients)
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "d": self.d,
            "coefficients": list(self.coefficients),
            "objective": str(self.objective),
        }


def check_lp_solution(solution: LPSolution) -> bool:
    """Re-verify every LP constraint; raises Infeasible naming the violation."""
    n, q, d = solution.n, solution.q, solution.d
    for i, c in enumerate(solution.coefficients):
        if c < 0:
            raise Infeasible(f"coefficient c_{i} = {c} is negative", witness=("sign", i))
    if sum(solution.coefficients) <= 0:
        raise Infeasible("total weight is not positive", witness=("positivity",))
    acc = sum(c * kraw(n, q, i, d) for i, c in enumerate(solution.coefficients))
    if acc != 0:
        raise Infeasible(
            f"weighted Krawtchouk column at d={d} sums to {acc}, expected 0",
            witness=("orthogonality", acc),
        )
    return True


def lp_two_support(n: int, q: int, d: int) -> LPSolution:
    """Best two-support feasible solution: c_0 = -K_i(d), c_i = 1.

    Scans shells i with K_i(d) <= 0 and keeps the smallest objective,
    breaking ties toward the smaller shell index.  A nonpositive value
    always exists for d >= 1 because the Krawtchouk column sums to zero.
    """
    HammingGraphSpec(n, q, d)
    best: LPSolution | None = None
    best_obj: int | None = None
    for i in range(1, n + 1):
        k = kraw(n, q, i, d)
        if k > 0:
            continue
        coeffs = [0] * (n + 1)
        coeffs[0] = -k
        coeffs[i] = 1
        sol = LPSolution(n, q, d, tuple(coeffs))
        obj = sol.objective
        if best_obj is None or obj < best_obj:
            best, best_obj = sol, obj
    if best is None:
        raise Infeasible(
            f"no shell index has a nonpositive Krawtchouk value at d={d}"
        )
    check_lp_solution(best)
    return best


def lp_search(
    n: int,
    q: int,
    d: int,
    max_support: int = 3,
    coeff_bound: int = 16,
) -> LPSolution:
    """Exhaustive search over small supports; never worse than two-support.

    Enumerates supports of up to ``max_support`` shell indices with
    coefficients in 1..coeff_bound, solving for c_0 from the vanishing
    constraint.  The search space grows fast, hence the support cap.
    """
    if max_support < 1 or max_support > LP_SEARCH_MAX_SUPPORT:
        raise UnsupportedSize(
            f"support size {max_support} outside 1..{LP_SEARCH_MAX_SUPPORT}"
        )
    if coeff_bound < 1:
        raise DomainError(f"coefficient bound must be >= 1, got {coeff_bound}")
    best = lp_two_support(n, q, d)
    best_obj = best.objective
    kcol = [kraw(n, q, i, d) for i in range(n + 1)]
    sizes = [(q - 1) ** i * binom(n, i) for i in range(n + 1)]
    for support_size in range(1, max_support + 1):
        for support in itertools.combinations(range(1, n + 1), support_size):
            for weights in itertools.product(range(1, coeff_bound + 1), repeat=support_size):
                c0 = -sum(w * kcol[i] for i, w in zip(support, weights))
                if c0 < 0:
                    continue
                obj = c0 + sum(w * sizes[i] for i, w in zip(support, weights))
                if obj < best_obj:
                    coeffs = [0] * (n + 1)
                    coeffs[0] = c0
                    for i, w in zip(support, weights):
                        coeffs[i] = w
                    best = LPSolution(n, q, d, tuple(coeffs))
                    best_obj = obj
    check_lp_solution(best)
    return best


# ---------------------------------------------------------------------------
# representations


def _digit_matrix(q: int, n: int, rows: int) -> np.ndarray:
    digits = np.empty((rows, n), dtype=np.int64)
    idx = np.arange(rows)
    for k in range(n - 1, -1, -1):
        digits[:, k] = idx % q
        idx = idx // q
    return digits


def _char_table(group: GroupSpec) -> np.ndarray:
    q = group.order
    return np.array(
        [[group.char_exponent(g, h) for h in range(q)] for g in range(q)],
        dtype=np.int64,
    )


class Representation:
    """A vertex-by-dimension matrix of unit-modulus cyclotomic entries.

    Rows follow the canonical base-q vertex order.  Entries are stored as
    exponents of the common root of unity; tests may swap individual
    entries for arbitrary cyclotomic values via :meth:`with_entry`, which
    is how the verifier's failure modes stay reachable.
    """

    def __init__(
        self,
        group: GroupSpec,
        n: int,
        exponents: np.ndarray,
        provenance: str,
        solution: LPSolution | None = None,
        overrides: dict[tuple[int, int], CycInt] | None = None,
    ):
        self.group = group
        self.n = n
        self.root_order = group.char_order
        self.exponents = exponents
        self.provenance = provenance
        self.solution = solution
        self.overrides = dict(overrides or {})

    @property
    def rows(self) -> int:
        return self.exponents.shape[0]

    @property
    def cols(self) -> int:
        return self.exponents.shape[1]

    def entry(self, row: int, col: int) -> CycInt:
        override = self.overrides.get((row, col))
        if override is not None:
            return override
        return CycInt.root_of_unity(self.root_order, int(self.exponents[row, col]))

    def with_entry(self, row: int, col: int, value: CycInt) -> Representation:
        """A copy of the representation with one entry replaced."""
        if not 0 <= row < self.rows or not 0 <= col < self.cols:
            raise DomainError(f"entry ({row}, {col}) outside the matrix")
        overrides = dict(self.overrides)
        overrides[(row, col)] = value
        return Representation(
            self.group, self.n, self.exponents, self.provenance, self.solution, overrides
        )

    def write_csv(self, fp: IO[str]) -> None:
        """CSV export: a root-order header, a column header, then one row
        per vertex with entries in canonical ``a0+a1*z+...`` form."""
        fp.write(f"root_order,{self.root_order}\n")
        fp.write("vertex," + ",".join(f"c{c}" for c in range(self.cols)) + "\n")
        for r in range(self.rows):
            cells = [str(r)]
            for c in range(self.cols):
                cells.append(self.entry(r, c).to_term_string())
            fp.write(",".join(cells) + "\n")

    def to_csv_text(self) -> str:
        import io

        buf = io.StringIO()
        self.write_csv(buf)
        return buf.getvalue()


def build_representation(solution: LPSolution, group: GroupSpec) -> Representation:
    """Assemble the character representation an LP solution prescribes.

    For every shell index i with c_i > 0 the block of columns indexed by
    the shell's words y carries the character vector of y, repeated c_i
    times; the entry in row x is phi_y(x).  The vanishing Krawtchouk
    constraint is exactly what makes rows at graph distance d orthogonal.
    """
    check_lp_solution(solution)
    if group.order != solution.q:
        raise SpecMismatch(
            f"group order {group.order} does not match solution alphabet q={solution.q}"
        )
    n, q = solution.n, solution.q
    rows = q**n
    if rows > REPRESENTATION_MAX_ROWS:
        raise SizeExceeded(
            f"representation would have {rows} rows; cap is {REPRESENTATION_MAX_ROWS}"
        )
    digits = _digit_matrix(q, n, rows)
    expt = _char_table(group)
    m = group.char_order
    blocks: list[np.ndarray] = []
    for i, c in enumerate(solution.coefficients):
        if c == 0:
            continue
        cols = []
        for y in enumerate_shell(group, n, i):
            col = np.zeros(rows, dtype=np.int64)
            for k, g in enumerate(y):
                if g:
                    col += expt[digits[:, k], g]
            cols.append(col % m)
        block = np.stack(cols, axis=1) if cols else np.zeros((rows, 0), dtype=np.int64)
        for _ in range(c):
            blocks.append(block)
    exponents = np.concatenate(blocks, axis=1)
    return Representation(group, n, exponents, "lp-orthogonal-representation", solution)


def hadamard_representation(group: GroupSpec, n: int) -> Representation:
    """The n-dimensional coordinatewise character representation.

    Row x is (phi(x_1), ..., phi(x_n)) for the fixed character phi of
    alphabet element 1.  Rows adjacent in the balanced composition graph
    are orthogonal because their inner product sums phi over every
    alphabet element equally often; hence the graph's quantum chromatic
    number is at most n.  Requires the alphabet size to divide n.
    """
    q = group.order
    if n % q:
        raise DivisibilityError(f"needs q | n, got q={q}, n={n}")
    rows = q**n
    if rows > REPRESENTATION_MAX_ROWS:
        raise SizeExceeded(
            f"representation would have {rows} rows; cap is {REPRESENTATION_MAX_ROWS}"
        )
    digits = _digit_matrix(q, n, rows)
    char1 = np.array([group.char_exponent(1, g) for g in range(q)], dtype=np.int64)
    exponents = char1[digits]
    return Representation(group, n, exponents, "hadamard-character")


# ---------------------------------------------------------------------------
# verification


_MASK64 = (1 << 64) - 1


def _mix64(z: int) -> int:
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _splitmix_stream(seed: int):
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def representation_seed(spec: HammingGraphSpec | CompositionGraphSpec) -> int:
    """Deterministic sampling seed derived from the graph parameters alone."""
    if isinstance(spec, HammingGraphSpec):
        values = (1, spec.n, spec.q, spec.d)
    else:
        values = (2, spec.n, spec.group.order, spec.group.char_order, *spec.dcomp)
    acc = 0x5851F42D4C957F2D
    for v in values:
        acc = _mix64(acc ^ (v & _MASK64))
    return acc


def _generating_labels(
    spec: HammingGraphSpec | CompositionGraphSpec, rep: Representation
) -> tuple[GroupSpec, int | Composition]:
    if isinstance(spec, HammingGraphSpec):
        if rep.group.order != spec.q:
            raise SpecMismatch(
                f"representation alphabet {rep.group.order} does not match q={spec.q}"
            )
        return rep.group, spec.d
    if rep.group != spec.group:
        raise SpecMismatch("representation and graph use different groups")
    return spec.group, spec.dcomp


def _pair_inner_is_zero(rep: Representation, xi: int, yi: int) -> bool:
    m = rep.root_order
    counts = [0] * m
    extra: CycInt | None = None
    for c in range(rep.cols):
        ox = rep.overrides.get((xi, c))
        oy = rep.overrides.get((yi, c))
        if ox is None and oy is None:
            counts[int(rep.exponents[yi, c] - rep.exponents[xi, c]) % m] += 1
        else:
            a = ox if ox is not None else CycInt.root_of_unity(m, int(rep.exponents[xi, c]))
            b = oy if oy is not None else CycInt.root_of_unity(m, int(rep.exponents[yi, c]))
            term = a.conjugate() * b
            extra = term if extra is None else extra + term
    total = CycInt.from_root_powers(m, counts)
    if extra is not None:
        total = total + extra
    return total.is_zero()


def verify_representation(
    rep: Representation,
    spec: HammingGraphSpec | CompositionGraphSpec,
    sample: int | None = None,
) -> bool:
    """Check unit modulus everywhere and orthogonality on adjacent pairs.

    Full mode (``sample=None``) walks every vertex x and every generator
    s, checking the pair (x, x + s); sampled mode draws ``sample`` pairs
    from the deterministic generator seeded by :func:`representation_seed`.
    Failures raise NotOrthogonal or NotUnitModulus carrying the first
    witness in canonical vertex order; a clean pass returns True.
    """
    group, label = _generating_labels(spec, rep)
    n = spec.n
    q = group.order
    if rep.n != n:
        raise SpecMismatch(f"representation length {rep.n} does not match n={n}")
    if rep.rows != q**n:
        raise SpecMismatch(f"representation has {rep.rows} rows, expected {q**n}")
    one = CycInt.from_int(rep.root_order, 1)
    for (r, c), value in sorted(rep.overrides.items()):
        if value * value.conjugate() != one:
            raise NotUnitModulus(r, c)

    m = rep.root_order
    if sample is not None:
        members = list(enumerate_shell(group, n, label))
        stream = _splitmix_stream(representation_seed(spec))
        digits_pow = [q ** (n - 1 - k) for k in range(n)]
        for _ in range(sample):
            xi = next(stream) % rep.rows
            s = members[next(stream) % len(members)]
            x_word = index_word(group, xi, n)
            yi = sum(group.add(a, b) * p for a, b, p in zip(x_word, s, digits_pow))
            if not _pair_inner_is_zero(rep, xi, yi):
                y_word = index_word(group, yi, n)
                raise NotOrthogonal(xi, yi, x_word, y_word)
        return True

    if rep.overrides:
        # Exact but slow path; only mutated representations land here.
        members = list(enumerate_shell(group, n, label))
        for xi in range(rep.rows):
            x_word = index_word(group, xi, n)
            failing: list[int] = []
            for s in members:
                y_word = tuple(group.add(a, b) for a, b in zip(x_word, s))
                yi = 0
                for g in y_word:
                    yi = yi * q + g
                if not _pair_inner_is_zero(rep, xi, yi):
                    failing.append(yi)
            if failing:
                yi = min(failing)
                raise NotOrthogonal(xi, yi, x_word, index_word(group, yi, n))
        return True

    digits = _digit_matrix(q, n, rep.rows)
    addt = np.array([[group.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    place = np.array([q ** (n - 1 - k) for k in range(n)], dtype=np.int64)
    red = np.array(_reduction_rows(m)[:m], dtype=np.int64)
    expm = rep.exponents
    witness: tuple[int, int] | None = None
    for s in enumerate_shell(group, n, label):
        perm = np.zeros(rep.rows, dtype=np.int64)
        for k, g in enumerate(s):
            perm += addt[digits[:, k], g] * place[k]
        diff = (expm[perm] - expm) % m
        counts = np.stack([(diff == r).sum(axis=1) for r in range(m)], axis=1)
        residue = counts @ red
        bad = np.nonzero(residue.any(axis=1))[0]
        if bad.size:
            xi = int(bad[0])
            yi = int(perm[xi])
            if witness is None or (xi, yi) < witness:
                witness = (xi, yi)
    if witness is not None:
        xi, yi = witness
        raise NotOrthogonal(xi, yi, index_word(group, xi, n), index_word(group, yi, n))
    return True


# ---------------------------------------------------------------------------
# reports


def _is_prime_power(v: int) -> bool:
    if v < 2:
        return False
    p = 2
    while p * p <= v:
        if v % p == 0:
            while v % p == 0:
                v //= p
            return v == 1
        p += 1
    return True


def _frac_str(value: Fraction | int) -> str:
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class BoundReport:
    """Lower and upper bounds on the quantum chromatic number of one graph.

    Each bound carries a tag naming the method that produced
    it.  ``exact`` is set only when a computed lower bound meets a
    computed upper bound; the report never asserts exactness on the
    strength of outside knowledge.
    """

    graph: HammingGraphSpec | CompositionGraphSpec
    lower: tuple[tuple[Fraction, str], ...]
    upper: tuple[tuple[Fraction, str], ...]
    exact: Fraction | None
    diagnostics: dict

    def to_json(self) -> dict:
        return {
            "graph": self.graph.describe(),
            "lower": [{"value": _frac_str(v), "method": tag} for v, tag in self.lower],
            "upper": [{"value": _frac_str(v), "method": tag} for v, tag in self.upper],
            "exact": None if self.exact is None else _frac_str(self.exact),
            "diagnostics": self.diagnostics,
        }


def _finish_report(
    spec: HammingGraphSpec | CompositionGraphSpec,
    lower: list[tuple[Fraction, str]],
    upper: list[tuple[Fraction, str]],
    diagnostics: dict,
) -> BoundReport:
    exact: Fraction | None = None
    if lower and upper:
        best_lower = max(v for v, _ in lower)
        best_upper = min(v for v, _ in upper)
        if best_lower == best_upper:
            exact = best_lower
    return BoundReport(spec, tuple(lower), tuple(upper), exact, diagnostics)


def bound_report(
    spec: HammingGraphSpec | CompositionGraphSpec,
    threads: int | None = None,
) -> BoundReport:
    """Compute every applicable bound for a graph and reconcile them."""
    if isinstance(spec, HammingGraphSpec):
        return _hamming_report(spec, threads)
    return _composition_report(spec, threads)


def _hamming_report(spec: HammingGraphSpec, threads: int | None) -> BoundReport:
    n, q, d = spec.n, spec.q, spec.d
    spectrum = hamming_spectrum(spec, threads=threads)
    lower: list[tuple[Fraction, str]] = [(hoffman_bound(spectrum), "hoffman")]
    solution = lp_two_support(n, q, d)
    upper: list[tuple[Fraction, str]] = [(Fraction(solution.objective), "lp-two-support")]
    diagnostics: dict = {
        "first_nonpositive_shell": first_nonpositive(n, q, d),
        "lp_coefficients": list(solution.coefficients),
    }
    slack = (q - 1) * n - q * d
    if slack <= 0:
        diagnostics["regime"] = "balanced-or-above"
        diagnostics["degree_cap"] = str(q * d)
    elif slack * slack < (q - 1) * n:
        diagnostics["regime"] = "near-balanced-window"
        diagnostics["window_cap"] = str(2 * (q - 1) ** 2 * binom(n, 2))
    else:
        diagnostics["regime"] = "entropy"
        diagnostics["entropy_exponent"] = entropy_q(q, first_root_ratio(q, d / n))
    return _finish_report(spec, lower, upper, diagnostics)


def _composition_report(spec: CompositionGraphSpec, threads: int | None) -> BoundReport:
    group, n = spec.group, spec.n
    diagnostics: dict = {
        "balanced": spec.balanced,
        "undirected": spec.undirected,
    }
    lower: list[tuple[Fraction, str]] = []
    upper: list[tuple[Fraction, str]] = []
    if spec.undirected:
        spectrum = composition_spectrum(spec, threads=threads)
        try:
            lower.append((hoffman_bound(spectrum), "hoffman"))
        except (IrrationalEigenvalue, NoNegativeEigenvalue, NonRealEigenvalue) as exc:
            diagnostics["hoffman_unavailable"] = type(exc).__name__
    if spec.balanced:
        upper.append((Fraction(n), "hadamard-character"))
        from .groups import FiniteField

        if isinstance(group, FiniteField) and _is_prime_power(n):
            diagnostics["prime_power_pair"] = True
    return _finish_report(spec, lower, upper, diagnostics)


# ---------------------------------------------------------------------------
# the balanced-minimum probe


@dataclass(frozen=True)
class ProbeVerdict:
    """Outcome of probing the balanced-graph least-eigenvalue prediction."""

    verdict: str
    q: int
    n: int
    reason: str | None = None
    minimum: int | None = None
    conjectured: Fraction | None = None
    pattern: Composition | None = None
    achieving: tuple[Composition, ...] = ()

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.verdict != "not-applicable":
            out["q"] = self.q
            out["n"] = self.n
            out["minimum"] = str(self.minimum)
            out["conjectured"] = _frac_str(self.conjectured)
            out["pattern_shell"] = list(self.pattern)
            out["achieving_shells"] = [list(a) for a in self.achieving]
        return out


def conjecture_probe(q: int, n: int, threads: int | None = None) -> ProbeVerdict:
    """Test whether the balanced graph's least eigenvalue matches the
    predicted value -multinom(n; n/q,...,n/q)/(n-1).

    The prediction concerns alphabets Z_q with (q-1)n/q even; the shell
    (n-2, 1, 0, ..., 0, 1) always attains the predicted value, so the
    probe computes the full spectrum and reports whether anything lies
    below it.  Odd (q-1)n/q is reported as not applicable.
    """
    if q < 2:
        raise DomainError(f"need q >= 2, got q={q}")
    if n % q:
        raise DivisibilityError(f"needs q | n, got q={q}, n={n}")
    if ((q - 1) * n // q) % 2:
        return ProbeVerdict("not-applicable", q, n, reason="(q-1)n/q odd")
    group = cyclic(q)
    spec = CompositionGraphSpec(group, n, Composition.balanced(q, n))
    spectrum = composition_spectrum(spec, threads=threads)
    minimum, _ = min_eigenvalue(spectrum)
    target = Fraction(-multinom(n, Composition.balanced(q, n)), n - 1)
    counts = [0] * q
    counts[0] = n - 2
    counts[1] += 1
    counts[q - 1] += 1
    pattern = Composition(tuple(counts))
    achieving = tuple(
        entry.label
        for entry in spectrum.entries
        if Fraction(entry.eigenvalue.expect_integer()) == Fraction(minimum)
    )
    verdict = "holds" if Fraction(minimum) == target else "fails"
    return ProbeVerdict(
        verdict,
        q,
        n,
        minimum=minimum,
        conjectured=target,
        pattern=pattern,
        achieving=achieving,
    )
