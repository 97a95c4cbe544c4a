"""
Темперированная энтропия и дивергенции Брегмана
"""

from typing import Callable

import numpy as np

from ..algebra import TemperatureLike, as_temperature, log_t
from ..errors import DomainError, NumericError
from .cosimplex import CoSimplexPoint, check_compatible
from .links import minimal_link

# Относительный допуск округления для знака дивергенции
BREGMAN_TOLERANCE = 1e-9


def neg_tempered_entropy(p_tilde: CoSimplexPoint) -> float:
    """
    Отрицательная темперированная энтропия Σ (p̃_i log_t p̃_i - log_{t-1} p̃_i)

    log_{t-1} - деформированный логарифм с параметром t - 1,
    т.е. (x^{2-t} - 1) / (2 - t). Градиент по p̃ равен log_t p̃.

    Args:
        p_tilde: Точка ко-симплекса (или любая положительная мера)

    Returns:
        F_t(p̃)
    """
    temp = p_tilde.temp
    values = p_tilde.values
    return float(np.sum(values * log_t(values, temp) - log_t(values, temp.shifted(-1.0))))


def neg_tempered_entropy_measure(values, temp: TemperatureLike) -> float:
    """F_t для произвольной положительной меры (без ограничения ко-симплекса)"""
    temp = as_temperature(temp)
    values = np.asarray(values, dtype=float)
    return float(np.sum(values * log_t(values, temp) - log_t(values, temp.shifted(-1.0))))


def minimal_entropy(reduced, temp: TemperatureLike) -> float:
    """
    F̂_t как функция первых d - 1 компонент: Σ_i p̃_i log_t p̃_i,
    где p̃_d восстанавливается из нормировки ко-симплекса

    Градиент равен θ̂ (связь минимальной формы).

    Args:
        reduced: Компоненты p̃_1..p̃_{d-1}
        temp: Температура

    Returns:
        F̂_t
    """
    temp = as_temperature(temp)
    head = np.asarray(reduced, dtype=float)
    rest = 1.0 - np.sum(head ** (2.0 - temp.t))
    if np.any(head <= 0) or rest <= 0:
        raise DomainError(f"minimal_entropy: точка {head} вне ко-симплекса")
    values = np.concatenate([head, [rest ** temp.t_star]])
    return float(np.sum(values * log_t(values, temp)))


def minimal_entropy_gradient(reduced, temp: TemperatureLike) -> np.ndarray:
    """∇F̂_t = θ̂ = log_t(p̃_i / p̃_d)"""
    temp = as_temperature(temp)
    head = np.asarray(reduced, dtype=float)
    rest = 1.0 - np.sum(head ** (2.0 - temp.t))
    if np.any(head <= 0) or rest <= 0:
        raise DomainError(f"minimal_entropy_gradient: точка {head} вне ко-симплекса")
    return np.atleast_1d(log_t(head / rest ** temp.t_star, temp))


def bregman_minimal(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """
    Дивергенция Брегмана минимальной формы

    Σ_{i<d} p̃_i [θ̂_i(p̃) - θ̂_i(q̃)] - log_t(1/p̃_d) + log_t(1/q̃_d)

    Args:
        p_tilde: Первая точка
        q_tilde: Вторая точка

    Returns:
        Неотрицательное значение, ноль только при p̃ = q̃

    Raises:
        NumericError: если значение отрицательно сверх допуска округления
    """
    check_compatible(p_tilde, q_tilde, 'bregman_minimal')
    p_params = minimal_link(p_tilde)
    q_params = minimal_link(q_tilde)
    linear = float(np.dot(p_tilde.values[:-1], p_params.theta_hat - q_params.theta_hat))
    value = linear - p_params.cumulant + q_params.cumulant
    scale = 1.0 + abs(linear) + abs(p_params.cumulant) + abs(q_params.cumulant)
    if value < -BREGMAN_TOLERANCE * scale:
        raise NumericError(f"bregman_minimal: отрицательная дивергенция {value}")
    return float(value)


def generic_bregman(F: Callable[[np.ndarray], float], grad_F: Callable[[np.ndarray], np.ndarray],
                    p, q) -> float:
    """
    Общая дивергенция Брегмана D_F(p, q) = F(p) - F(q) - ∇F(q)·(p - q)

    Args:
        F: Выпуклая функция
        grad_F: Ее градиент
        p: Первая точка
        q: Вторая точка

    Returns:
        D_F(p, q)
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return float(F(p) - F(q) - np.dot(grad_F(q), p - q))
