"""
Деформированная скалярная алгебра: log_t, exp_t, ⊕_t, ⊖_t
"""

from .temperature import Temperature, TemperatureLike, as_temperature, scaled_temperature
from .operations import (
    log_t, exp_t, is_clipped, t_add, t_sub, t_neg, t_sum, t_fold,
    log_t_exp, log_t_exp_derivative
)

__all__ = [
    'Temperature', 'TemperatureLike', 'as_temperature', 'scaled_temperature',
    'log_t', 'exp_t', 'is_clipped', 't_add', 't_sub', 't_neg', 't_sum', 't_fold',
    'log_t_exp', 'log_t_exp_derivative'
]
