"""Command-line front end.

Six subcommands: ``spectrum`` and ``bounds`` emit JSON for one graph,
``represent`` materializes an orthogonal representation as CSV,
``verify`` runs the self-check suites, ``probe`` tests the balanced
least-eigenvalue prediction, and ``table`` tabulates bound families over
a parameter grid.  All output is deterministic: JSON keys are sorted,
big integers travel as decimal strings, and repeated invocations produce
byte-identical bytes.  Exit codes: 0 success, 1 verification failure,
2 malformed flags.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Callable, Sequence

from .bounds import (
    bound_report,
    build_representation,
    conjecture_probe,
    hadamard_representation,
    lp_two_support,
    representation_seed,
    verify_representation,
)
from .errors import (
    BadLabel,
    DivisibilityError,
    DomainError,
    Infeasible,
    NotFound,
    NotOrthogonal,
    NotUnitModulus,
    RangeError,
    SizeExceeded,
    SpecMismatch,
    SumMismatch,
    UnsupportedSize,
)
from .exactnum import binom, multinom
from .groups import (
    Composition,
    GroupSpec,
    cyclic,
    enumerate_compositions,
    finite_field,
)
from .krawtchouk import gen_kraw, gen_kraw_circulant, kraw, zero_shell_predicate
from .schemes import (
    CompositionGraphSpec,
    HammingGraphSpec,
    composition_spectrum,
    eigenvector_check,
    hamming_spectrum,
    hoffman_bound,
    min_eigenvalue,
    projector_identity_check,
    trace_identity_check,
)

_FLAG_ERRORS = (
    BadLabel,
    DivisibilityError,
    DomainError,
    NotFound,
    RangeError,
    SizeExceeded,
    SpecMismatch,
    SumMismatch,
    UnsupportedSize,
    ValueError,
)

_VERIFY_ERRORS = (Infeasible, NotOrthogonal, NotUnitModulus)


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _threads_from(args: argparse.Namespace) -> int | None:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("SCHEME_SPECTRA_THREADS")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise DomainError(f"SCHEME_SPECTRA_THREADS={env!r} is not an integer") from exc
    return None


def _parse_comp(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise BadLabel(f"cannot parse composition {text!r}") from exc


def _make_group(args: argparse.Namespace) -> GroupSpec:
    if args.group == "field":
        modulus = _parse_comp(args.modulus) if args.modulus else None
        return finite_field(args.q, modulus)
    if args.modulus:
        raise SpecMismatch("--modulus only applies to --group field")
    return cyclic(args.q)


def _graph_from_args(args: argparse.Namespace):
    if args.family == "hamming":
        if args.d is None:
            raise RangeError("--family hamming requires --d")
        if args.group != "cyclic" or args.modulus:
            raise SpecMismatch("hamming graphs do not take --group/--modulus")
        return HammingGraphSpec(args.n, args.q, args.d)
    group = _make_group(args)
    if args.comp is not None:
        dcomp = Composition(_parse_comp(args.comp))
    else:
        dcomp = Composition.balanced(args.q, args.n)
    return CompositionGraphSpec(group, args.n, dcomp)


def _add_graph_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", choices=("hamming", "composition"), required=True)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--q", type=int, required=True)
    sub.add_argument("--d", type=int, default=None, help="Hamming distance")
    sub.add_argument(
        "--comp",
        default=None,
        help="composition counts, comma separated (default: balanced n/q,...)",
    )
    sub.add_argument("--group", choices=("cyclic", "field"), default="cyclic")
    sub.add_argument("--modulus", default=None, help="field modulus coefficients, constant first")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_spectrum(args: argparse.Namespace) -> int:
    spec = _graph_from_args(args)
    threads = _threads_from(args)
    if isinstance(spec, HammingGraphSpec):
        spectrum = hamming_spectrum(spec, threads=threads)
    else:
        spectrum = composition_spectrum(spec, threads=threads)
    print(_dump(spectrum.to_json()))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    spec = _graph_from_args(args)
    report = bound_report(spec, threads=_threads_from(args))
    print(_dump(report.to_json()))
    return 0


def _cmd_represent(args: argparse.Namespace) -> int:
    group = _make_group(args)
    solution = lp_two_support(args.n, args.q, args.d)
    rep = build_representation(solution, group)
    spec = HammingGraphSpec(args.n, args.q, args.d)
    sample = args.sample
    verify_representation(rep, spec, sample=sample)
    summary = {
        "rows": str(rep.rows),
        "columns": rep.cols,
        "objective": str(solution.objective),
        "coefficients": list(solution.coefficients),
        "mode": "full" if sample is None else "sampled",
        "verified": True,
        "out": args.out,
    }
    if sample is not None:
        summary["sample"] = sample
        summary["seed"] = str(representation_seed(spec))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fp:
            rep.write_csv(fp)
        print(_dump(summary))
    else:
        rep.write_csv(sys.stdout)
        print(_dump(summary), file=sys.stderr)
    return 0


def _cmd_probe(args: argparse.Namespace) -> int:
    verdict = conjecture_probe(args.q, args.n, threads=_threads_from(args))
    print(_dump(verdict.to_json()))
    return 0


# -- verify suites ----------------------------------------------------------


def _suite_reciprocity(max_n: int, emit: Callable[[str], None]) -> list[str]:
    failures: list[str] = []
    for q in (2, 3, 4, 5):
        for n in range(1, max_n + 1):
            for i in range(n + 1):
                for j in range(n + 1):
                    lhs = (q - 1) ** j * binom(n, j) * kraw(n, q, i, j)
                    rhs = (q - 1) ** i * binom(n, i) * kraw(n, q, j, i)
                    if lhs != rhs:
                        failures.append(f"classical reciprocity at q={q} n={n} i={i} j={j}")
    emit_name = f"classical reciprocity, q in 2..5, n <= {max_n}"
    emit(("ok - " if not failures else "FAIL - ") + emit_name)
    for q in (2, 3):
        group = cyclic(q)
        for n in range(1, min(max_n, 5) + 1):
            comps = list(enumerate_compositions(q, n))
            for ci in comps:
                for cj in comps:
                    lhs = gen_kraw(group, n, ci, cj).value * multinom(n, cj)
                    rhs = gen_kraw(group, n, cj, ci).value * multinom(n, ci)
                    if lhs != rhs:
                        failures.append(
                            f"composition reciprocity at q={q} n={n} i={tuple(ci)} j={tuple(cj)}"
                        )
    emit(
        ("ok - " if len(failures) == 0 else "FAIL - ")
        + f"composition reciprocity, q in 2..3, n <= {min(max_n, 5)}"
    )
    return failures


def _suite_projectors(max_n: int, emit: Callable[[str], None]) -> list[str]:
    failures: list[str] = []
    checked = 0
    q = 2
    while q**1 <= 81:
        n = 1
        while q**n <= 81 and n <= max_n:
            if not projector_identity_check(n, q):
                failures.append(f"projector identities at n={n} q={q}")
            checked += 1
            n += 1
        q += 1
    emit(("ok - " if not failures else "FAIL - ") + f"projector identities on {checked} grids")
    return failures


def _representation_grid(max_n: int) -> list[tuple[int, int, int]]:
    grid = []
    for q in (2, 3):
        for n in range(1, max_n + 1):
            if q**n > 2187:
                continue
            d_lo = -((-(q - 1) * n) // q)
            for d in range(max(1, d_lo), n + 1):
                grid.append((n, q, d))
    return grid


def _suite_representations(max_n: int, emit: Callable[[str], None]) -> list[str]:
    failures: list[str] = []
    for n, q, d in _representation_grid(max_n):
        spec = HammingGraphSpec(n, q, d)
        rep = build_representation(lp_two_support(n, q, d), cyclic(q))
        try:
            verify_representation(rep, spec)
        except (NotOrthogonal, NotUnitModulus) as exc:
            failures.append(f"lp representation at n={n} q={q} d={d}: {exc}")
    emit(
        ("ok - " if not failures else "FAIL - ")
        + f"lp representations over {len(_representation_grid(max_n))} graphs"
    )
    had = 0
    for q, make in ((2, cyclic), (3, cyclic), (4, finite_field)):
        group = make(q)
        for n in range(q, max_n + 1, q):
            spec = CompositionGraphSpec(group, n, Composition.balanced(q, n))
            rep = hadamard_representation(group, n)
            try:
                verify_representation(rep, spec)
            except (NotOrthogonal, NotUnitModulus) as exc:
                failures.append(f"hadamard representation at q={q} n={n}: {exc}")
            had += 1
    emit(("ok - " if len(failures) == 0 else "FAIL - ") + f"hadamard representations on {had} graphs")
    return failures


def _suite_eigenvalues(max_n: int, emit: Callable[[str], None]) -> list[str]:
    failures: list[str] = []
    for q in (3, 4, 5):
        for n in range(2, max_n + 1):
            d_lo = ((q - 1) * n + 1 + q - 1) // q
            for d in range(d_lo, n + 1):
                spectrum = hamming_spectrum(HammingGraphSpec(n, q, d))
                lam, shell = min_eigenvalue(spectrum)
                expected_num = -((q - 1) ** d) * binom(n, d) * (q * d - (q - 1) * n)
                if Fraction(expected_num, (q - 1) * n) != lam or shell != 1:
                    failures.append(f"least-eigenvalue closed form at n={n} q={q} d={d}")
                if hoffman_bound(spectrum) != Fraction(q * d, q * d - (q - 1) * n):
                    failures.append(f"spectral bound closed form at n={n} q={q} d={d}")
    emit(("ok - " if not failures else "FAIL - ") + f"least-eigenvalue closed forms, n <= {max_n}")
    before = len(failures)
    for q in (2, 3, 4):
        for n in range(q, max_n + 1, q):
            spectrum = composition_spectrum(
                CompositionGraphSpec(cyclic(q), n, Composition.balanced(q, n))
            )
            if not trace_identity_check(spectrum):
                failures.append(f"trace identity at balanced q={q} n={n}")
            for entry in spectrum.entries:
                if zero_shell_predicate(q, entry.label):
                    if entry.eigenvalue.expect_integer() != 0:
                        failures.append(
                            f"zero-shell prediction at q={q} n={n} shell={tuple(entry.label)}"
                        )
                value = entry.eigenvalue.expect_integer()
                circ = gen_kraw_circulant(q, n, entry.label)
                if circ != value:
                    failures.append(
                        f"circulant route disagrees at q={q} n={n} shell={tuple(entry.label)}"
                    )
    emit(
        ("ok - " if len(failures) == before else "FAIL - ")
        + f"balanced spectra: trace, zero shells, circulant agreement, n <= {max_n}"
    )
    before = len(failures)
    spot = [
        (HammingGraphSpec(4, 2, 2), (1, 0, 0, 0)),
        (HammingGraphSpec(3, 3, 2), (0, 1, 2)),
        (CompositionGraphSpec(cyclic(3), 3, Composition((1, 1, 1))), (1, 2, 0)),
    ]
    for spec, x in spot:
        group = cyclic(spec.q) if isinstance(spec, HammingGraphSpec) else spec.group
        from .groups import all_words

        if not eigenvector_check(spec, x, all_words(group, spec.n)):
            failures.append(f"eigenvector action at {spec.describe()} x={x}")
    emit(("ok - " if len(failures) == before else "FAIL - ") + "eigenvector adjacency action spot checks")
    return failures


_SUITES = {
    "reciprocity": _suite_reciprocity,
    "projectors": _suite_projectors,
    "representations": _suite_representations,
    "eigenvalues": _suite_eigenvalues,
}


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    failures: list[str] = []
    for name in names:
        failures.extend(_SUITES[name](args.max_n, print))
    if failures:
        print(f"FAIL: {failures[0]}")
        return 1
    print(f"all checks passed ({', '.join(names)})")
    return 0


# -- tables -----------------------------------------------------------------


def _parse_grid(text: str) -> tuple[int, tuple[int, ...]]:
    m_n = re.search(r"n\s*(?:≤|<=)\s*(\d+)", text)
    m_q = re.search(r"q\s*(?:∈|in|=)\s*\{([\d\s,]+)\}", text)
    if not m_n or not m_q:
        raise BadLabel(f"cannot parse grid {text!r}; expected like 'n<=10,q in {{2,3}}'")
    max_n = int(m_n.group(1))
    qs = tuple(sorted(int(tok) for tok in m_q.group(1).replace(" ", "").split(",") if tok))
    if max_n < 1 or not qs or any(q < 2 for q in qs):
        raise BadLabel(f"degenerate grid {text!r}")
    return max_n, qs


def _table_upper(max_n: int, qs: tuple[int, ...], out) -> None:
    out.write("n,q,d,regime,lp_objective,regime_cap\n")
    for q in qs:
        for n in range(1, max_n + 1):
            for d in range(1, n + 1):
                report = bound_report(HammingGraphSpec(n, q, d))
                regime = report.diagnostics["regime"]
                cap = report.diagnostics.get("degree_cap") or report.diagnostics.get(
                    "window_cap", ""
                )
                upper = min(v for v, _ in report.upper)
                out.write(f"{n},{q},{d},{regime},{upper},{cap}\n")


def _table_lower(max_n: int, qs: tuple[int, ...], out) -> None:
    out.write("n,q,d,case,hoffman\n")
    for q in qs:
        if q < 3:
            continue
        for n in range(2, max_n + 1):
            for d in range(1, n + 1):
                if q * d < (q - 1) * n:
                    continue
                case = "balanced" if q * d == (q - 1) * n else "strict"
                spectrum = hamming_spectrum(HammingGraphSpec(n, q, d))
                value = hoffman_bound(spectrum)
                num, den = value.numerator, value.denominator
                text = str(num) if den == 1 else f"{num}/{den}"
                out.write(f"{n},{q},{d},{case},{text}\n")


def _table_exact(max_n: int, qs: tuple[int, ...], out) -> None:
    out.write("family,q,n,lower,upper,exact\n")
    for q in qs:
        for n in range(q, max_n + 1, q):
            specs = [("cyclic", CompositionGraphSpec(cyclic(q), n, Composition.balanced(q, n)))]
            try:
                fld = finite_field(q)
            except DomainError:
                fld = None
            if fld is not None:
                specs.append(
                    ("field", CompositionGraphSpec(fld, n, Composition.balanced(q, n)))
                )
            for family, spec in specs:
                report = bound_report(spec)
                lower = max((v for v, _ in report.lower), default=None)
                upper = min((v for v, _ in report.upper), default=None)
                exact = report.exact
                fmt = lambda v: "" if v is None else (str(v.numerator) if v.denominator == 1 else str(v))
                out.write(f"{family},{q},{n},{fmt(lower)},{fmt(upper)},{fmt(exact)}\n")


def _cmd_table(args: argparse.Namespace) -> int:
    max_n, qs = _parse_grid(args.grid)
    if args.theorem == "1.1":
        _table_upper(max_n, qs, sys.stdout)
    elif args.theorem == "1.2":
        _table_lower(max_n, qs, sys.stdout)
    else:
        _table_exact(max_n, qs, sys.stdout)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scheme-spectra",
        description="Exact spectra and quantum-chromatic bounds for Hamming and composition graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help="cap internal parallelism (default: SCHEME_SPECTRA_THREADS or serial)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="exact spectrum of one graph as JSON")
    _add_graph_flags(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("bounds", parents=[common], help="bound report for one graph as JSON")
    _add_graph_flags(p)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("represent", parents=[common], help="build and verify an orthogonal representation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--group", choices=("cyclic", "field"), default="cyclic")
    p.add_argument("--modulus", default=None)
    p.add_argument("--out", default=None, help="CSV destination (default: stdout)")
    p.add_argument("--sample", type=int, default=None, help="sampled verification pair count")
    p.set_defaults(fn=_cmd_represent)

    p = sub.add_parser("verify", parents=[common], help="run the self-check suites")
    p.add_argument(
        "--suite",
        choices=("reciprocity", "projectors", "representations", "eigenvalues", "all"),
        required=True,
    )
    p.add_argument("--max-n", dest="max_n", type=int, default=6)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("probe", parents=[common], help="probe the balanced least-eigenvalue prediction")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_probe)

    p = sub.add_parser("table", parents=[common], help="tabulate a bound family over a grid")
    p.add_argument("--theorem", choices=("1.1", "1.2", "1.3"), required=True,
                   help="1.1 upper bounds, 1.2 spectral lower bounds, 1.3 balanced exact values")
    p.add_argument("--grid", required=True, help="like 'n<=10,q in {2,3}'")
    p.set_defaults(fn=_cmd_table)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _VERIFY_ERRORS as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except _FLAG_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
