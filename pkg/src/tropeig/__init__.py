"""Max-plus eigenvalues, generalized eigenvectors and tropical Rayleigh bounds."""
from .charpoly import algebraic_eigenvalues, char_coefficients, char_coefficients_oracle, spectrum
from .errors import TropicalError
from .geneig import Case, GenEigenpair, construct, construct_all, construct_leq, construct_second, eigenpairs_from, verify
from .matrix import TropMatrix, matmul, matvec, max_norm, quadratic_form, scale, self_inner, vector
from .poly import MaxPolynomial, RootMultiset, evaluate, roots, roots_oracle
from .semiring import EPS, format_scalar, parse_scalar, scalar, tadd, tinv, tmul, tpow
from .spectral import (
    RangeInterval,
    RayleighReport,
    SpanSample,
    geometric_eigenvector,
    max_cycle_mean,
    numerical_range,
    rayleigh_quotient,
    rayleigh_span_check,
    sample_span,
)

__all__ = [name for name in dir() if not name.startswith("_")]
