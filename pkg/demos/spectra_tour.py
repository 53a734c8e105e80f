# Tour of exact graph spectra: Hamming distance graphs and their
# composition-graph refinements, all in integer / cyclotomic arithmetic.

import numpy as np

from scheme_spectra import (
    Composition,
    CompositionGraphSpec,
    HammingGraphSpec,
    all_words,
    comp,
    composition_spectrum,
    cyclic,
    finite_field,
    hamming_spectrum,
    min_eigenvalue,
    trace_identity_check,
    word_sub,
    weight,
)

# A Hamming graph: vertices are ternary words of length 3, adjacent when
# they differ in all 3 coordinates.
spec = HammingGraphSpec(3, 3, 3)
spectrum = hamming_spectrum(spec)
print(f"H(n=3,q=3,d=3): degree {spectrum.regular_degree}, {spectrum.vertex_count} vertices")
for entry in spectrum.entries:
    print(f"  weight shell {entry.label}: eigenvalue {entry.eigenvalue}, multiplicity {entry.multiplicity}")

# The sum of multiplicity * eigenvalue^2 must equal vertices * degree
# (both sides count closed walks of length 2).
assert trace_identity_check(spectrum)

# Cross-check the whole spectrum against a dense eigensolver.
words = list(all_words(cyclic(3), 3))
a = np.zeros((27, 27))
for i, x in enumerate(words):
    for j, y in enumerate(words):
        if weight(word_sub(cyclic(3), y, x)) == 3:
            a[i, j] = 1
dense = sorted(np.linalg.eigvalsh(a).round(8))
exact = sorted(float(e.eigenvalue) for e in spectrum.entries for _ in range(e.multiplicity))
assert dense == exact
print("dense eigensolver agrees on all 27 eigenvalues")

# Composition graphs refine the distance: the edge rule fixes how often
# each group element appears in y - x, not just how many are nonzero.
group = cyclic(3)
balanced = Composition.balanced(3, 6)  # each nonzero difference pattern (2,2,2)
cspec = CompositionGraphSpec(group, 6, balanced)
cspectrum = composition_spectrum(cspec)
print(f"\nbalanced composition graph on Z_3^6: degree {cspectrum.regular_degree}")

value, shell = min_eigenvalue(cspectrum)
print(f"minimum eigenvalue {value} on shell {tuple(shell)}")
assert value == -18  # == -multinom(6, (2,2,2)) / (6 - 1)

# The same construction over the field F_4 (not a cyclic group!).
f4 = finite_field(4)
fspec = CompositionGraphSpec(f4, 4, Composition.balanced(4, 4))
fspectrum = composition_spectrum(fspec)
fvalue, fshell = min_eigenvalue(fspectrum)
print(f"\nbalanced graph on F_4^4: degree {fspectrum.regular_degree}, min {fvalue} at {tuple(fshell)}")
assert fvalue == -8  # == -4!/3

# comp() is the bookkeeping primitive underneath: it tallies elements.
x = (0, 1, 1, 2, 0, 1)
print(f"\ncomp({x}) over Z_3 = {tuple(comp(group, x))}")
assert tuple(comp(group, x)) == (2, 3, 1)
