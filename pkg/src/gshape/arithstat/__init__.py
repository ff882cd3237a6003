"""Counting triples by height, local densities and limit densities."""

from .counting import (
    CountResult,
    count_triples,
    default_threads,
    prime_ideal_tail_sum,
    tail_constant,
    tail_mass,
)
from .density import (
    DEFAULT_QMAX,
    DensityReport,
    density_report,
    euler_product,
    euler_product_with_tail,
    g_sum,
    g_sum_terms,
    theoretical_density_all,
    theoretical_density_carefree,
)
from .local import (
    COPRIME,
    G_CLASSES,
    P2_DIVISIBLE,
    P_EXACTLY,
    BudgetExceeded,
    LocalDensity,
    class_sizes,
    fiber_count,
    fiber_count_bruteforce,
    local_density_bruteforce,
    local_density_formula,
    residue_system,
)
from .region import Rectangle, height, height_below, is_strongly_carefree
