"""Cohomology of Ravenel's exterior complex E(h_{i,j})_n over F_p.

The exterior complex on generators h_{i,j} (1 <= i <= n, j in Z/n) is an
additive model for the cohomology of the height-n Morava stabilizer
algebra.  This package computes its bigraded cohomology exactly and checks
the finite degree computations that rest on it.
"""

from moravacoh.arithmetic import (
    GreekDegree,
    InternalDegree,
    LambdaElement,
    PrimeContext,
    ext_reduction,
    greek_degree,
    lambda_set,
    lemma_int_negate,
    make_context,
    moore_dual_shift,
)
from moravacoh.complex import (
    Cochain,
    GeneratorId,
    Monomial,
    SignedMonomial,
    differential,
    dual,
    enumerate_basis,
    generator_degree,
    multiply,
    top_class,
)
from moravacoh.linalg import (
    BidegreeSlice,
    CohomologyResult,
    FpMatrix,
    build_slice,
    cohomology,
    in_image,
    kernel_basis,
    rank,
)

__version__ = "0.1.0"

__all__ = [
    "BidegreeSlice",
    "Cochain",
    "CohomologyResult",
    "FpMatrix",
    "GeneratorId",
    "GreekDegree",
    "InternalDegree",
    "LambdaElement",
    "Monomial",
    "PrimeContext",
    "SignedMonomial",
    "build_slice",
    "cohomology",
    "differential",
    "dual",
    "enumerate_basis",
    "ext_reduction",
    "generator_degree",
    "greek_degree",
    "in_image",
    "kernel_basis",
    "lambda_set",
    "lemma_int_negate",
    "make_context",
    "moore_dual_shift",
    "multiply",
    "rank",
    "top_class",
]
