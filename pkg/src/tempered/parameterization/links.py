"""
Параметризации дискретных темперированных мер

Минимальная (θ̂ ∈ R^{d-1}), неограниченная (θ ∈ R^d) и ограниченная
(θ̌ на касательной поверхности) формы, их связи, обратные связи и
двойственные функции Лежандра.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.special import logsumexp

from ..algebra import (
    Temperature, TemperatureLike, as_temperature,
    log_t, exp_t, is_clipped, t_sub, t_neg
)
from ..errors import DomainError, TemperatureError
from .cosimplex import CoSimplexPoint

# Значение G_t(θ) для неограниченной формы (нормировка ко-симплекса)
UNCONSTRAINED_CUMULANT = 1.0


@dataclass(frozen=True, eq=False)
class MinimalParams:
    """
    Минимальная параметризация

    Attributes:
        theta_hat: Вектор θ̂ длины d - 1
        cumulant: G_t(θ̂) = log_t(1 / p̃_d)
        temp: Температура
    """

    theta_hat: np.ndarray
    cumulant: float
    temp: Temperature


@dataclass(frozen=True, eq=False)
class NaturalParams:
    """Неограниченная параметризация θ = log_t p̃"""

    theta: np.ndarray
    temp: Temperature


@dataclass(frozen=True, eq=False)
class ConstrainedParams:
    """Ограниченная параметризация θ̌ в касательном пространстве"""

    theta_check: np.ndarray
    temp: Temperature


def _vector_and_temp(value, temp: Optional[TemperatureLike], attr: str) -> Tuple[np.ndarray, Temperature]:
    if hasattr(value, attr):
        vector = np.asarray(getattr(value, attr), dtype=float)
        return vector, value.temp if temp is None else as_temperature(temp)
    if temp is None:
        raise TemperatureError(f"Для вектора {attr} требуется явная температура")
    return np.asarray(value, dtype=float).reshape(-1), as_temperature(temp)


def _require_unclipped(theta: np.ndarray, temp: Temperature, operation: str) -> None:
    if np.any(is_clipped(theta, temp)):
        raise DomainError(f"{operation}: exp_t отсекает компоненты {theta} при t={temp.t}")


# ---------- Минимальная форма ----------

def minimal_link(p_tilde: CoSimplexPoint) -> MinimalParams:
    """
    Связь минимальной формы θ̂_i = log_t(p̃_i / p̃_d), i < d

    Args:
        p_tilde: Внутренняя точка ко-симплекса

    Returns:
        MinimalParams с кумулянтой log_t(1/p̃_d)
    """
    temp = p_tilde.temp
    values = p_tilde.values
    last = values[-1]
    theta_hat = np.atleast_1d(log_t(values[:-1] / last, temp))
    return MinimalParams(theta_hat, float(log_t(1.0 / last, temp)), temp)


def _minimal_normalizer(theta_hat: np.ndarray, temp: Temperature) -> Tuple[np.ndarray, float]:
    """exp_t θ̂ и log(1 + Σ exp_t^{1/t*} θ̂_i)"""
    _require_unclipped(theta_hat, temp, 'minimal')
    e = np.atleast_1d(exp_t(theta_hat, temp))
    if np.any(e <= 0):
        raise DomainError(f"minimal: восстановление выходит из положительного ортанта при θ̂={theta_hat}")
    log_terms = np.concatenate([[0.0], (2.0 - temp.t) * np.log(e)])
    return e, float(logsumexp(log_terms))


def minimal_inverse_link(theta_hat, temp: Optional[TemperatureLike] = None) -> CoSimplexPoint:
    """
    Обратная связь: p̃_d = (1 + Σ exp_t^{1/t*} θ̂_i)^{-t*}, p̃_i = exp_t(θ̂_i) p̃_d

    Args:
        theta_hat: Вектор θ̂ или MinimalParams
        temp: Температура (если θ̂ передан массивом)

    Returns:
        Точка ко-симплекса
    """
    theta_hat, temp = _vector_and_temp(theta_hat, temp, 'theta_hat')
    e, log_z = _minimal_normalizer(theta_hat, temp)
    last = np.exp(-temp.t_star * log_z)
    return CoSimplexPoint(np.concatenate([e * last, [last]]), temp)


def minimal_dual(theta_hat, temp: Optional[TemperatureLike] = None) -> float:
    """
    Двойственная функция минимальной формы G_t(θ̂) = log_t[(1 + Σ exp_t^{1/t*} θ̂_i)^{t*}]

    Градиент совпадает с первыми d - 1 компонентами minimal_inverse_link.
    """
    theta_hat, temp = _vector_and_temp(theta_hat, temp, 'theta_hat')
    _, log_z = _minimal_normalizer(theta_hat, temp)
    return float(log_t(np.exp(temp.t_star * log_z), temp))


def canonical_density(theta_hat, temp: Optional[TemperatureLike] = None) -> CoSimplexPoint:
    """
    Каноническая форма: p̃_i = exp_t(θ̂_i ⊖_t G_t(θ̂)), p̃_d = exp_t(⊖_t G_t(θ̂))
    """
    theta_hat, temp = _vector_and_temp(theta_hat, temp, 'theta_hat')
    cumulant = minimal_dual(theta_hat, temp)
    head = np.atleast_1d(exp_t(t_sub(theta_hat, cumulant, temp), temp))
    last = exp_t(t_neg(cumulant, temp), temp)
    return CoSimplexPoint(np.concatenate([head, [last]]), temp)


# ---------- Неограниченная форма ----------

def unconstrained_link(p_tilde: CoSimplexPoint) -> NaturalParams:
    """θ = log_t p̃"""
    return NaturalParams(np.atleast_1d(log_t(p_tilde.values, p_tilde.temp)), p_tilde.temp)


def unconstrained_inverse_link(theta, temp: Optional[TemperatureLike] = None) -> np.ndarray:
    """f*_t(θ) = exp_t θ (положительная мера, не обязательно на ко-симплексе)"""
    theta, temp = _vector_and_temp(theta, temp, 'theta')
    _require_unclipped(theta, temp, 'unconstrained_inverse_link')
    return np.atleast_1d(exp_t(theta, temp))


def unconstrained_dual(theta, temp: Optional[TemperatureLike] = None) -> float:
    """
    Двойственная функция неограниченной формы t* (Σ exp_t^{1/t*} θ_i - 1)

    Args:
        theta: NaturalParams или вектор θ
        temp: Температура (для вектора)

    Returns:
        Значение двойственной функции
    """
    theta, temp = _vector_and_temp(theta, temp, 'theta')
    e = unconstrained_inverse_link(theta, temp)
    return float(temp.t_star * (np.sum(e ** (2.0 - temp.t)) - 1.0))


# ---------- Ограниченная форма ----------

def _lambda_log_ratio(values: np.ndarray, temp: Temperature) -> float:
    """log(Σ p̃^{1-t} / Σ p̃^{2-2t})"""
    k = temp.one_minus_t
    logs = np.log(values)
    return float(logsumexp(k * logs) - logsumexp(2.0 * k * logs))


def lagrange_lambda(p_tilde: CoSimplexPoint) -> float:
    """
    Множитель Лагранжа λ_t = log_t[(Σ p̃^{1-t} / Σ p̃^{2-2t})^{1/(1-t)}]

    При t = 1 - логарифм обратного геометрического среднего.

    Args:
        p_tilde: Внутренняя точка ко-симплекса

    Returns:
        λ_t
    """
    temp = p_tilde.temp
    if temp.is_classic:
        return float(-np.mean(np.log(p_tilde.values)))
    return float(np.expm1(_lambda_log_ratio(p_tilde.values, temp)) / temp.one_minus_t)


def constrained_link(p_tilde: CoSimplexPoint) -> ConstrainedParams:
    """
    Ограниченная связь θ̌ = log_t(p̃ / λ̃_t), λ̃_t = 1 / exp_t(λ_t)

    Результат лежит в касательном пространстве: p̃^{1-t} · θ̌ = 0.
    """
    temp = p_tilde.temp
    values = p_tilde.values
    if temp.is_classic:
        logs = np.log(values)
        return ConstrainedParams(logs - np.mean(logs), temp)

    k = temp.one_minus_t
    log_ratio = _lambda_log_ratio(values, temp)
    # (p̃_i exp_t(λ))^{1-t} = p̃_i^{1-t} · R
    theta_check = np.expm1(k * np.log(values) + log_ratio) / k
    return ConstrainedParams(theta_check, temp)


def tangent_projection(p_tilde: CoSimplexPoint) -> np.ndarray:
    """
    Проектор на касательное пространство P_t = I - a aᵀ / Σ a², a = p̃^{1-t}

    Args:
        p_tilde: Точка ко-симплекса

    Returns:
        Матрица d×d
    """
    a = p_tilde.values ** p_tilde.temp.one_minus_t
    return np.eye(p_tilde.dim) - np.outer(a, a) / np.dot(a, a)


def _softmax_terms(theta_check: np.ndarray, temp: Temperature, operation: str) -> Tuple[np.ndarray, float]:
    """exp_t θ̌ и log Σ exp_t^{1/t*} θ̌_i по неотсеченным компонентам"""
    clipped = np.atleast_1d(is_clipped(theta_check, temp))
    if np.all(clipped):
        raise DomainError(f"{operation}: все компоненты θ̌={theta_check} отсекаются при t={temp.t}")
    if temp.t > 1 and np.any(clipped):
        raise DomainError(f"{operation}: компоненты θ̌={theta_check} за полюсом exp_t при t={temp.t}")

    e = np.atleast_1d(exp_t(theta_check, temp))
    live = e > 0
    log_z = float(logsumexp((2.0 - temp.t) * np.log(e[live])))
    return e, log_z


def tempered_softmax(theta_check, temp: Optional[TemperatureLike] = None) -> CoSimplexPoint:
    """
    Темперированный softmax exp_t θ̌_i / (Σ exp_t^{1/t*} θ̌_j)^{t*}

    Отсеченные при t < 1 компоненты дают нулевую ко-плотность, результат
    в этом случае граничная точка (interior=False).

    Args:
        theta_check: ConstrainedParams или вектор θ̌
        temp: Температура (для вектора)

    Returns:
        Точка ко-симплекса
    """
    theta_check, temp = _vector_and_temp(theta_check, temp, 'theta_check')
    e, log_z = _softmax_terms(theta_check, temp, 'tempered_softmax')
    values = e * np.exp(-temp.t_star * log_z)
    return CoSimplexPoint(values, temp, interior=bool(np.all(e > 0)))


constrained_inverse_link = tempered_softmax


def constrained_dual(theta_check, temp: Optional[TemperatureLike] = None) -> float:
    """Темперированный log-sum-exp log_t[(Σ exp_t^{1/t*} θ̌_i)^{t*}]"""
    theta_check, temp = _vector_and_temp(theta_check, temp, 'theta_check')
    _, log_z = _softmax_terms(theta_check, temp, 'constrained_dual')
    return float(log_t(np.exp(temp.t_star * log_z), temp))
