# Lower and upper bounds on the quantum chromatic number of distance
# graphs, and the balanced cases where the two meet exactly.

import json

from scheme_spectra import (
    Composition,
    CompositionGraphSpec,
    HammingGraphSpec,
    bound_report,
    conjecture_probe,
    cyclic,
    finite_field,
    hamming_spectrum,
    hoffman_bound,
)

# The spectral lower bound 1 - lambda_max/lambda_min, computed exactly.
spectrum = hamming_spectrum(HammingGraphSpec(3, 3, 2))
print("chi_Q(H(3,3,2)) >=", hoffman_bound(spectrum))
assert hoffman_bound(spectrum) == 5

# bound_report packages lower bounds, upper bounds, and regime diagnostics.
report = bound_report(HammingGraphSpec(3, 3, 3))
print(json.dumps(report.to_json(), sort_keys=True, indent=2))

# Three regimes for the LP-based upper bound, classified by the distance:
#   - at or above the balance point (q-1)n/q: bounded by the degree
#   - just below it (within sqrt((q-1)n)/q): quadratic in n
#   - well below: exponential, with the growth exponent reported
for d in (2, 4, 8):
    diag = bound_report(HammingGraphSpec(10, 2, d)).diagnostics
    extra = diag.get("entropy_exponent") or diag.get("window_cap") or diag.get("degree_cap")
    print(f"H(10,2,{d}) sits in regime {diag['regime']!r} ({extra})")

# Balanced composition graphs on q | n letters close the gap completely:
# a character-built representation gives chi_Q <= n, and the second-shell
# eigenvalue pushes the spectral bound up to meet it.
for group, n in ((cyclic(2), 4), (finite_field(3), 9)):
    spec = CompositionGraphSpec(group, n, Composition.balanced(group.order, n))
    report = bound_report(spec)
    print(f"balanced graph, q={group.order}, n={n}: exact chi_Q = {report.exact}")
    assert report.exact == n

# The cyclic route depends on where the minimum eigenvalue lands; probe it.
verdict = conjecture_probe(3, 6)
print(f"\nprobe q=3, n=6: {verdict.verdict}, minimum {verdict.minimum} "
      f"on shell {tuple(verdict.pattern)} (predicted {verdict.conjectured})")
assert verdict.verdict == "holds"

# When (q-1)n/q is odd the prediction does not even apply - the report
# then keeps an honest gap instead of inventing an exact value.
report = bound_report(CompositionGraphSpec(cyclic(2), 6, Composition.balanced(2, 6)))
print(f"q=2, n=6 stays open: lower {max(v for v, _ in report.lower)}, "
      f"upper {min(v for v, _ in report.upper)}, exact {report.exact}")
assert report.exact is None
