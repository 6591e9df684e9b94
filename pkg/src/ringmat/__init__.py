"""Exact linear algebra over commutative rings.

Matrices carry their ring with them; determinants are computed without
division, so everything works verbatim over Z, Z/m (including zero
divisors), Q, and nested polynomial rings.  On top of the arithmetic
sit the characteristic-polynomial routines (direct and trace-recursion)
and a verification engine that checks several dozen determinant and
trace identities on concrete or fuzzed inputs.
"""

from .charpoly import (
    CharPolyData,
    adjugate_via_charpoly,
    cayley_hamilton_residual,
    charpoly,
    charpoly_newton,
    power_traces,
    trace_cayley_hamilton_residual,
)
from .derivations import (
    Derivation,
    ddt,
    scaled_ddt,
    standard_derivations,
    zero_derivation,
)
from .fuzz import SplitMix64, derive_seed, sample_element, sample_matrix, stream
from .matrix import Matrix, apply_poly, block2x2, char_matrix, ent
from .poly import Polynomial, PolynomialRing
from .report import VerificationReport, summarize
from .rings import (
    QQ,
    ZZ,
    GuardError,
    IntegerRing,
    ModRing,
    ParseError,
    PreconditionError,
    QAlgebraRequiredError,
    RationalRing,
    Ring,
    RingError,
    RingMismatchError,
    ShapeError,
    axiom_spotcheck,
    try_div_int,
)
from .serialize import matrix_from_json, parse_ring, ring_from_descriptor
from .suite import IDENTITY_NAMES, SUITES, resolve_suite, run_suite

__version__ = "0.1.0"

__all__ = [
    "CharPolyData", "Derivation", "GuardError", "IDENTITY_NAMES",
    "IntegerRing", "Matrix", "ModRing", "ParseError", "Polynomial",
    "PolynomialRing", "PreconditionError", "QAlgebraRequiredError", "QQ",
    "RationalRing", "Ring", "RingError", "RingMismatchError", "SUITES",
    "ShapeError", "SplitMix64", "VerificationReport", "ZZ",
    "adjugate_via_charpoly", "apply_poly", "axiom_spotcheck", "block2x2",
    "cayley_hamilton_residual", "char_matrix", "charpoly", "charpoly_newton",
    "ddt", "derive_seed", "ent", "matrix_from_json", "parse_ring",
    "power_traces", "resolve_suite", "ring_from_descriptor", "run_suite",
    "sample_element", "sample_matrix", "scaled_ddt", "standard_derivations",
    "stream", "summarize", "trace_cayley_hamilton_residual", "try_div_int",
    "zero_derivation",
]
