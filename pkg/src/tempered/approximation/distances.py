"""
Дифференцируемые t-расстояния Функа и Гильберта и их градиенты
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..algebra import Temperature, TemperatureLike, as_temperature, log_t, t_add
from ..errors import DomainError
from ..parameterization import CoSimplexPoint, check_compatible
from .lse import lse_t, lse_t_gradient


@dataclass(frozen=True)
class SmoothingConfig:
    """
    Параметры сглаживания

    Attributes:
        T: Сглаживание T > 0
        delta: Рассогласование δ >= 0; при δ > 0 гладкий максимум берется
            при температуре 1 - δ
    """

    T: float = 20.0
    delta: float = 0.0

    def __post_init__(self):
        if not self.T > 0:
            raise DomainError(f"SmoothingConfig: T должно быть положительным, получено {self.T}")
        if not self.delta >= 0:
            raise DomainError(f"SmoothingConfig: δ должно быть неотрицательным, получено {self.delta}")

    @property
    def mismatched(self) -> bool:
        return self.delta > 0

    def max_temperature(self, temp: TemperatureLike) -> Temperature:
        """Температура гладкого максимума: 1 - δ или t"""
        if self.mismatched:
            return Temperature(1.0 - self.delta)
        return as_temperature(temp)


def _positive_pair(p, q, operation: str) -> Tuple[np.ndarray, np.ndarray]:
    p = np.asarray(p, dtype=float).reshape(-1)
    q = np.asarray(q, dtype=float).reshape(-1)
    if p.shape != q.shape:
        raise DomainError(f"{operation}: разные размерности {p.shape} и {q.shape}")
    if np.any(~(p > 0)) or np.any(~(q > 0)):
        raise DomainError(f"{operation}: компоненты должны быть положительны")
    return p, q


def diff_funk_values(p, q, temp: TemperatureLike, cfg: SmoothingConfig) -> float:
    """Дифференцируемый t-Функ на положительных векторах: LSE(log_t(p / q), T)"""
    temp = as_temperature(temp)
    p, q = _positive_pair(p, q, 'diff_funk')
    return lse_t(np.atleast_1d(log_t(p / q, temp)), cfg.T, cfg.max_temperature(temp))


def diff_hilbert_values(p, q, temp: TemperatureLike, cfg: SmoothingConfig) -> float:
    """Дифференцируемый t-Гильберт на положительных векторах"""
    temp = as_temperature(temp)
    return float(t_add(diff_funk_values(p, q, temp, cfg), diff_funk_values(q, p, temp, cfg), temp))


def diff_funk(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint, cfg: SmoothingConfig) -> float:
    """
    Дифференцируемый t-Функ ρ_{t-dFD}(p̃, q̃) = LSE_{t или 1-δ}(log_t(p̃/q̃), T)

    Args:
        p_tilde: Первая точка
        q_tilde: Вторая точка
        cfg: Параметры сглаживания

    Returns:
        Сглаженное расстояние (при p̃ = q̃ не равно нулю)
    """
    check_compatible(p_tilde, q_tilde, 'diff_funk')
    return diff_funk_values(p_tilde.values, q_tilde.values, p_tilde.temp, cfg)


def diff_hilbert(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint, cfg: SmoothingConfig) -> float:
    """Дифференцируемый t-Гильберт: ρ_{t-dFD}(p̃, q̃) ⊕_t ρ_{t-dFD}(q̃, p̃)"""
    check_compatible(p_tilde, q_tilde, 'diff_hilbert')
    return diff_hilbert_values(p_tilde.values, q_tilde.values, p_tilde.temp, cfg)


def diff_hilbert_gradient_values(p, q, temp: TemperatureLike, cfg: SmoothingConfig) -> Tuple[np.ndarray, np.ndarray]:
    """
    Градиент дифференцируемого t-Гильберта по компонентам p и q

    Цепное правило через ⊕_t, LSE_t и log_t отношений:
    d log_t(r)/dr = r^{-t}, dH/da = 1 + (1 - t) b, dH/db = 1 + (1 - t) a.

    Args:
        p: Положительный вектор
        q: Положительный вектор
        temp: Температура
        cfg: Параметры сглаживания

    Returns:
        (градиент по p, градиент по q)
    """
    temp = as_temperature(temp)
    p, q = _positive_pair(p, q, 'diff_hilbert_gradient')
    max_temp = cfg.max_temperature(temp)
    k = temp.one_minus_t

    ratio = p / q
    forward_args = np.atleast_1d(log_t(ratio, temp))
    backward_args = np.atleast_1d(log_t(1.0 / ratio, temp))
    forward = lse_t(forward_args, cfg.T, max_temp)
    backward = lse_t(backward_args, cfg.T, max_temp)
    g_forward = lse_t_gradient(forward_args, cfg.T, max_temp)
    g_backward = lse_t_gradient(backward_args, cfg.T, max_temp)

    weight_forward = (1.0 + k * backward) * g_forward * ratio ** (-temp.t)
    weight_backward = (1.0 + k * forward) * g_backward * ratio ** temp.t

    grad_p = weight_forward / q - weight_backward * q / p ** 2
    grad_q = -weight_forward * p / q ** 2 + weight_backward / p
    return grad_p, grad_q


def diff_hilbert_gradient(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint,
                          cfg: SmoothingConfig) -> Tuple[np.ndarray, np.ndarray]:
    """Градиент diff_hilbert по p̃ и q̃ (компоненты как свободные положительные переменные)"""
    check_compatible(p_tilde, q_tilde, 'diff_hilbert_gradient')
    return diff_hilbert_gradient_values(p_tilde.values, q_tilde.values, p_tilde.temp, cfg)
