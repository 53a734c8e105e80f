"""Exact spectra of Hamming and composition graphs over finite alphabets,
with orthogonal-representation bounds on the quantum chromatic number."""

from .errors import (
    BadLabel,
    DivisibilityError,
    DomainError,
    Infeasible,
    IrrationalEigenvalue,
    NoNegativeEigenvalue,
    NonRealEigenvalue,
    NotFound,
    NotOrthogonal,
    NotUnitModulus,
    OrderMismatch,
    PrecisionEscalationError,
    RangeError,
    SchemeSpectraError,
    SizeExceeded,
    SpecMismatch,
    SumMismatch,
    UnsupportedSize,
)
from .exactnum import ComplexApprox, CycInt, binom, cyclotomic_polynomial, entropy_q, multinom
from .groups import (
    Composition,
    CyclicGroup,
    FiniteField,
    GroupSpec,
    all_words,
    char_value,
    comp,
    cyclic,
    default_modulus,
    enumerate_compositions,
    enumerate_shell,
    finite_field,
    index_word,
    shell_size,
    weight,
    word_add,
    word_char_exponent,
    word_char_value,
    word_index,
    word_neg,
    word_sub,
)
from .krawtchouk import (
    GenKrawValue,
    first_nonpositive,
    first_root_ratio,
    gen_kraw,
    gen_kraw_circulant,
    kraw,
    zero_shell_predicate,
)
from .schemes import (
    CompositionGraphSpec,
    HammingGraphSpec,
    Spectrum,
    SpectrumEntry,
    composition_spectrum,
    eigenvector_check,
    hamming_spectrum,
    hoffman_bound,
    max_eigenvalue,
    min_eigenvalue,
    multiplicity_ratio,
    projector_identity_check,
    trace_identity_check,
)
from .bounds import (
    BoundReport,
    LPSolution,
    ProbeVerdict,
    Representation,
    bound_report,
    build_representation,
    check_lp_solution,
    conjecture_probe,
    hadamard_representation,
    lp_search,
    lp_two_support,
    representation_seed,
    verify_representation,
)

__version__ = "0.1.0"
