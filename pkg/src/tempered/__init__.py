"""
tempered - темперированные экспоненциальные меры, t-геометрия Функа/Гильберта,
t-исчисление и дифференцируемые приближения расстояний
"""

from .errors import (
    TemperedError, TemperatureError, DomainError, ChartError, ConvergenceError, DivergenceError, NumericError
)
from .algebra import Temperature

__version__ = '1.0.0'

__all__ = [
    'TemperedError', 'TemperatureError', 'DomainError', 'ChartError', 'ConvergenceError', 'DivergenceError', 'NumericError',
    'Temperature', '__version__'
]
