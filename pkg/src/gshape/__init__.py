"""Arithmetic of the fields Q(i, m^(1/4)): decomposition m = f g^2 h^3, integral bases,
Minkowski Gram matrices and lattice shapes, and counts of (f, g, h) by height."""

from . import arithstat, kernels
from .bases import IntegralBasis, compare_spans, integral_basis, is_algebraic_integer
from .closed_forms import gram_closed_form, transition_matrix
from .decompose import (
    NO_MATCH,
    CaseMatch,
    FghDecomposition,
    NotFourthPowerFree,
    audit_partition,
    classify,
    decompose,
    defines_octic_field,
)
from .gaussian import (
    GaussianInt,
    GaussianPrime,
    ParseError,
    factor,
    format_gaussian,
    gcd,
    parse_gaussian,
)
from .minkowski import gram_numeric, project_shape, renormalized_gram, shape_params

__version__ = "0.1.0"
