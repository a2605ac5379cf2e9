"""Exact arithmetic in differential polynomial rings R[x; d] over finite-dimensional Q-algebras."""

from .algebra import (
    Algebra,
    AlgebraElement,
    FreeNilpotentAlgebra,
    Subspace,
    algebra_nilpotency_index,
    element_nilpotency_index,
    free_nilpotent_algebra,
    heisenberg_algebra,
    make_algebra,
    mul_elements,
    power,
    subalgebra_closure,
    subspace_contains,
)
from .derivation import (
    Derivation,
    apply_power,
    derivation_from_images,
    extend_from_generators,
    inner_derivation,
    is_locally_nilpotent,
    local_nilpotency_index,
    make_derivation,
    zero_derivation,
)
from .errors import (
    AssociativityViolation,
    DiffPolyError,
    DimensionMismatch,
    DuplicatePoint,
    ExponentOverflow,
    InconsistentSamples,
    LeibnizViolation,
    LemmaViolation,
    NotLocallyNilpotent,
    NotNilpotentWithinBound,
    NTooSmall,
    ParentMismatch,
    PreconditionViolated,
    SizeExceeded,
    TraceAssertionFailure,
)
from .harness import (
    LemmaId,
    LemmaReport,
    TheoremTrace,
    compute_N,
    run_suite,
    trace_main_theorem,
    verify_lemma1,
    verify_lemma3,
    verify_lemma4,
    verify_lemma4_at_zero,
    verify_lemma5,
    verify_property1,
    verify_weyl_homomorphism,
)
from .interpolation import RValuedPolynomial, evaluate, interpolate, is_identically_zero, sample
from .ore import (
    BiOrePoly,
    Coeff,
    bi_ore_mul,
    OrePoly,
    commute_negative,
    commute_power,
    conjugate,
    conjugate_by_power,
    embed_weyl,
    embed_weyl_x,
    ore_mul,
    ore_pow,
    shifted_conjugate,
    weyl_y,
)
from .radical import (
    QuasiInverseResult,
    conjugated_quasi_inverse,
    quasi_inverse_horner,
    quasi_inverse_nilpotent,
    verify_quasi_inverse,
)
from .rational import Rational, binomial, to_rational

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "algebra_nilpotency_index",
    "AlgebraElement",
    "apply_power",
    "AssociativityViolation",
    "bi_ore_mul",
    "binomial",
    "BiOrePoly",
    "Coeff",
    "commute_negative",
    "commute_power",
    "compute_N",
    "conjugate",
    "conjugate_by_power",
    "conjugated_quasi_inverse",
    "Derivation",
    "derivation_from_images",
    "DiffPolyError",
    "DimensionMismatch",
    "DuplicatePoint",
    "element_nilpotency_index",
    "embed_weyl",
    "embed_weyl_x",
    "evaluate",
    "ExponentOverflow",
    "extend_from_generators",
    "free_nilpotent_algebra",
    "FreeNilpotentAlgebra",
    "heisenberg_algebra",
    "InconsistentSamples",
    "inner_derivation",
    "interpolate",
    "is_identically_zero",
    "is_locally_nilpotent",
    "LeibnizViolation",
    "LemmaId",
    "LemmaReport",
    "LemmaViolation",
    "local_nilpotency_index",
    "make_algebra",
    "make_derivation",
    "mul_elements",
    "NotLocallyNilpotent",
    "NotNilpotentWithinBound",
    "NTooSmall",
    "ore_mul",
    "ore_pow",
    "OrePoly",
    "ParentMismatch",
    "power",
    "PreconditionViolated",
    "quasi_inverse_horner",
    "quasi_inverse_nilpotent",
    "QuasiInverseResult",
    "Rational",
    "run_suite",
    "RValuedPolynomial",
    "sample",
    "shifted_conjugate",
    "SizeExceeded",
    "subalgebra_closure",
    "Subspace",
    "subspace_contains",
    "TheoremTrace",
    "to_rational",
    "trace_main_theorem",
    "TraceAssertionFailure",
    "verify_lemma1",
    "verify_lemma3",
    "verify_lemma4",
    "verify_lemma4_at_zero",
    "verify_lemma5",
    "verify_property1",
    "verify_quasi_inverse",
    "verify_weyl_homomorphism",
    "weyl_y",
    "zero_derivation",
]
