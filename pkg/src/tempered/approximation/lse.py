"""
Темперированный log-sum-exp LSE_t(x, T) = (1/T) log_t Σ exp_t(T x_i)
"""

from typing import Tuple

import numpy as np
from scipy.special import logsumexp, softmax

from ..algebra import TemperatureLike, as_temperature, exp_t, is_clipped, log_t, t_add, t_neg, t_sub
from ..errors import DomainError
from ..geometry import t_var_norm


def _check_inputs(x, T: float, operation: str) -> np.ndarray:
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.size == 0:
        raise DomainError(f"{operation}: пустой вектор")
    if not T > 0:
        raise DomainError(f"{operation}: сглаживание T должно быть положительным, получено T={T}")
    return x


def _shifted_terms(x: np.ndarray, T: float, temp) -> Tuple[float, np.ndarray]:
    """T·max и exp_t(T x_i ⊖_t T max); требует неотсеченного T·max"""
    top = T * float(np.max(x))
    shifted = t_sub(T * x, top, temp)
    return top, np.atleast_1d(exp_t(shifted, temp))


def lse_t(x, T: float, temp: TemperatureLike) -> float:
    """
    Гладкий максимум LSE_t(x, T)

    Максимум выносится за скобку: log_t Σ exp_t(T x_i) = T m ⊕_t log_t Σ exp_t(T x_i ⊖_t T m).
    Если T·max за полюсом exp_t (t > 1), сумма бесконечна и значение
    насыщается на 1 / (T (t - 1)).

    Args:
        x: Вектор
        T: Сглаживание T > 0
        temp: Температура

    Returns:
        LSE_t(x, T)
    """
    temp = as_temperature(temp)
    x = _check_inputs(x, T, 'lse_t')
    if temp.is_classic:
        return float(logsumexp(T * x) / T)

    top = T * float(np.max(x))
    if is_clipped(top, temp):
        if temp.t < 1:
            raise DomainError(f"lse_t: все слагаемые exp_t(T x) отсекаются при t={temp.t}")
        return float(log_t(np.inf, temp) / T)

    _, terms = _shifted_terms(x, T, temp)
    return float(t_add(top, log_t(float(np.sum(terms)), temp), temp) / T)


def lse_t_gradient(x, T: float, temp: TemperatureLike) -> np.ndarray:
    """
    Градиент LSE_t по x: (exp_t(T x_i) / Σ_j exp_t(T x_j))^t

    Raises:
        DomainError: при насыщении (T·max за полюсом exp_t)
    """
    temp = as_temperature(temp)
    x = _check_inputs(x, T, 'lse_t_gradient')
    if temp.is_classic:
        return softmax(T * x)

    top = T * float(np.max(x))
    if is_clipped(top, temp):
        raise DomainError(f"lse_t_gradient: насыщение, T·max={top} за полюсом exp_t при t={temp.t}")
    _, terms = _shifted_terms(x, T, temp)
    return (terms / np.sum(terms)) ** temp.t


def _bound_epsilons(x: np.ndarray, T: float, temp) -> Tuple[float, float]:
    d = x.size
    spread = t_var_norm(T * x, temp)
    e = float(exp_t(t_neg(spread, temp), temp))
    eps_lower = float(log_t(1.0 + (d - 1) * e, temp))
    eps_upper = float(log_t((d - 1) + e, temp)) if d > 1 else 0.0
    return eps_lower, eps_upper


def lse_error_bounds(x, T: float, temp: TemperatureLike) -> Tuple[float, float]:
    """
    Двусторонние границы (1/T)(max_i T x_i ⊕_t ε) для LSE_t

    ε^ℓ = log_t(1 + (d - 1) exp_t ⊖_t ||Tx||_{t-var}),
    ε^r = log_t((d - 1) + exp_t ⊖_t ||Tx||_{t-var}).

    Args:
        x: Вектор
        T: Сглаживание
        temp: Температура

    Returns:
        (lower, upper)
    """
    temp = as_temperature(temp)
    x = _check_inputs(x, T, 'lse_error_bounds')
    eps_lower, eps_upper = _bound_epsilons(x, T, temp)
    top = T * float(np.max(x))
    lower = float(t_add(top, eps_lower, temp) / T)
    upper = float(t_add(top, eps_upper, temp) / T)
    return lower, upper


def alternate_bound_form(x, T: float, temp: TemperatureLike) -> Tuple[float, float]:
    """
    Те же границы в виде обычной суммы: max_i x_i + (1/T)(1 + (1 - t) max_i T x_i) ε
    """
    temp = as_temperature(temp)
    x = _check_inputs(x, T, 'alternate_bound_form')
    eps_lower, eps_upper = _bound_epsilons(x, T, temp)
    top = float(np.max(x))
    scale = (1.0 + temp.one_minus_t * T * top) / T
    return top + scale * eps_lower, top + scale * eps_upper
