"""
Темперированное исчисление: t-производная, t-интеграл, t-длины
"""

from .derivative import (
    t_derivative, t_derivative_closed, const_t_derivative_solution,
    const_t_second_derivative_solution
)
from .integral import Division, uniform_division, riemann_t_sum, t_integral, t_integral_numeric
from .finsler import (
    Curve, straight_curve, constant_curve, tautological_lagrangian, t_length,
    halfspace_t_funk, t_geodesic_point, VELOCITY_STEP
)

__all__ = [
    't_derivative', 't_derivative_closed', 'const_t_derivative_solution',
    'const_t_second_derivative_solution',
    'Division', 'uniform_division', 'riemann_t_sum', 't_integral', 't_integral_numeric',
    'Curve', 'straight_curve', 'constant_curve', 'tautological_lagrangian', 't_length',
    'halfspace_t_funk', 't_geodesic_point', 'VELOCITY_STEP'
]
