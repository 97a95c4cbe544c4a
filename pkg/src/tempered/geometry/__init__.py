"""
Темперированная геометрия Функа и Гильберта
"""

from .domains import AT_INFINITY, ConvexDomain, ray_boundary
from .distances import (
    TVarValue, t_funk_domain, t_hilbert_domain, cross_ratio_hilbert,
    t_funk_cosimplex, t_hilbert_cosimplex, t_hilbert_raw, t_hilbert_cosimplex_batch,
    t_funk_via_domain, t_hilbert_via_domain, t_var_norm, t_nh_norm,
    isometry_unconstrained, isometry_constrained, validate_partition, coarse_grain,
    random_partition, check_contraction, contraction_ratio, t_triangle_equality, classic_scale
)
from .sampling import BALL_KINDS, simplex_grid, cell_diameter, sample_ball, sample_bisector

__all__ = [
    'AT_INFINITY', 'ConvexDomain', 'ray_boundary',
    'TVarValue', 't_funk_domain', 't_hilbert_domain', 'cross_ratio_hilbert',
    't_funk_cosimplex', 't_hilbert_cosimplex', 't_hilbert_raw', 't_hilbert_cosimplex_batch',
    't_funk_via_domain', 't_hilbert_via_domain', 't_var_norm', 't_nh_norm',
    'isometry_unconstrained', 'isometry_constrained', 'validate_partition', 'coarse_grain',
    'random_partition', 'check_contraction', 'contraction_ratio', 't_triangle_equality', 'classic_scale',
    'BALL_KINDS', 'simplex_grid', 'cell_diameter', 'sample_ball', 'sample_bisector'
]
