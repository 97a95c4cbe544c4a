"""
t-производная и решения уравнений с постоянной t-производной
"""

from typing import Callable, Optional

import numpy as np

from ..algebra import TemperatureLike, as_temperature, is_clipped
from ..errors import DomainError
from ..utils import MathUtils

RealFunction = Callable[[float], float]


def t_derivative(f: RealFunction, x: float, temp: TemperatureLike, h: Optional[float] = None) -> float:
    """
    t-производная lim (f(x + δ) ⊖_t f(x)) / δ центральной разностью

    Обе односторонние t-разности делятся на одну скобку 1 + (1 - t) f(x),
    поэтому оценка имеет второй порядок по h.

    Args:
        f: Скалярная функция
        x: Точка
        temp: Температура
        h: Шаг (по умолчанию 1e-5 · max(1, |x|))

    Returns:
        D_t f(x)
    """
    temp = as_temperature(temp)
    fx = float(f(x))
    if is_clipped(fx, temp):
        raise DomainError(f"t_derivative: 1 + (1 - t) f(x) <= 0 при x={x}, f(x)={fx}, t={temp.t}")
    slope = MathUtils.central_difference(f, x, h)
    return float(slope / (1.0 + temp.one_minus_t * fx))


def t_derivative_closed(derivative: float, value: float, temp: TemperatureLike) -> float:
    """Прямое выражение D_t f = f'(x) / (1 + (1 - t) f(x))"""
    temp = as_temperature(temp)
    if is_clipped(value, temp):
        raise DomainError(f"t_derivative_closed: значение f(x)={value} отсекается при t={temp.t}")
    return float(derivative / (1.0 + temp.one_minus_t * value))


def const_t_derivative_solution(K: float, temp: TemperatureLike) -> RealFunction:
    """
    Решение D_t f = K с f(0) = 0: f(x) = (exp((1 - t) K x) - 1) / (1 - t)

    При t = 1 - f(x) = K x.
    """
    temp = as_temperature(temp)
    k = temp.one_minus_t

    def solution(x: float) -> float:
        if temp.is_classic:
            return float(K * x)
        return float(np.expm1(k * K * x) / k)

    return solution


def const_t_second_derivative_solution(K: float, temp: TemperatureLike) -> RealFunction:
    """
    Решение D_t ∘ D_t f = K с пределом (K/2) x² при t -> 1

    f(x) = (exp(((exp((1 - t) K x) - 1) / K - (1 - t) x) / (1 - t)) - 1) / (1 - t)

    Args:
        K: Ненулевая константа
        temp: Температура

    Returns:
        Функция f
    """
    if K == 0:
        raise DomainError("const_t_second_derivative_solution: требуется K != 0")
    temp = as_temperature(temp)
    k = temp.one_minus_t

    def solution(x: float) -> float:
        if temp.is_classic:
            return float(0.5 * K * x * x)
        inner = (np.expm1(k * K * x) / K - k * x) / k
        return float(np.expm1(inner) / k)

    return solution
