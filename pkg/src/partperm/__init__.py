"""Exact algebra of partial permutations, partial Jucys-Murphy elements and
transitive star factorization counts."""

from .algebra import (
    GroupAlgebraElement,
    PartialPermutation,
    PPElement,
    conjugate_action,
    e_tilde,
    expectation,
    forget,
    phi_restrict,
    pp_multiply,
    project_down,
    transitive_part,
)
from .combinatorics import (
    Partition,
    Permutation,
    compose,
    cycle_type,
    num_cycles,
    part_transform,
    partitions_of,
    z_value,
)
from .invariant import AlphaExpansion, a_element, alpha_coordinates, alpha_element, class_sum, is_invariant
from .jucys_murphy import (
    classical_jm,
    elementary_xi_closed,
    elementary_xi_direct,
    p_monomial,
    power_sum_classical,
    power_sum_xi,
    xi,
)
from .series import TruncatedSeries, exp_series, f_series, phi_series_q, phi_series_sinh
from .star import (
    biane_m_brute,
    biane_m_formula,
    count_algebraic,
    count_brute,
    count_gj,
    g_lambda,
    m_partial,
    pr_class_expansion,
)

__version__ = "0.1.0"
