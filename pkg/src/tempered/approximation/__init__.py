"""
Дифференцируемые приближения t-расстояний
"""

from .lse import lse_t, lse_t_gradient, lse_error_bounds, alternate_bound_form
from .distances import (
    SmoothingConfig, diff_funk, diff_hilbert, diff_funk_values, diff_hilbert_values,
    diff_hilbert_gradient, diff_hilbert_gradient_values
)
from .histogram import HistogramRecord, relative_error_histogram

__all__ = [
    'lse_t', 'lse_t_gradient', 'lse_error_bounds', 'alternate_bound_form',
    'SmoothingConfig', 'diff_funk', 'diff_hilbert', 'diff_funk_values', 'diff_hilbert_values',
    'diff_hilbert_gradient', 'diff_hilbert_gradient_values',
    'HistogramRecord', 'relative_error_histogram'
]
