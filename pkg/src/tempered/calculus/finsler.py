"""
Тавтологическая структура Финслера, t-длины кривых и t-геодезические
"""

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from ..algebra import TemperatureLike, as_temperature, exp_t, is_clipped, log_t, t_neg, t_sum
from ..errors import DomainError
from ..geometry import ConvexDomain

# Шаг численной скорости кривой
VELOCITY_STEP = 1e-6

PointMap = Callable[[float], np.ndarray]


@dataclass(frozen=True)
class Curve:
    """
    Гладкая кривая γ: [0, 1] -> R^d

    Attributes:
        position: Отображение параметра в точку
        velocity: Аналитическая скорость (None - центральные разности)
    """

    position: PointMap
    velocity: Optional[PointMap] = None

    def point(self, s: float) -> np.ndarray:
        return np.atleast_1d(np.asarray(self.position(s), dtype=float))

    def speed_vector(self, s: float) -> np.ndarray:
        """Скорость γ̇(s); на концах отрезка - односторонняя разность"""
        if self.velocity is not None:
            return np.atleast_1d(np.asarray(self.velocity(s), dtype=float))
        h = VELOCITY_STEP
        low = max(s - h, 0.0)
        high = min(s + h, 1.0)
        return (self.point(high) - self.point(low)) / (high - low)


def straight_curve(r, s) -> Curve:
    """Отрезок γ(u) = r + u (s - r) с аналитической скоростью"""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    s = np.atleast_1d(np.asarray(s, dtype=float))
    direction = s - r
    return Curve(lambda u: r + u * direction, lambda u: direction)


def constant_curve(x) -> Curve:
    x = np.atleast_1d(np.asarray(x, dtype=float))
    return Curve(lambda u: x, lambda u: np.zeros_like(x))


def tautological_lagrangian(domain: ConvexDomain, x, xi) -> float:
    """
    Тавтологический лагранжиан F(x, ξ) = inf{τ > 0 : x + ξ/τ in Ω}

    Для полупространства - замкнутая форма max(ν·ξ / (c - ν·x), 0),
    для остальных областей - ||ξ|| / ||b - x||, b - точка выхода луча.

    Args:
        domain: Выпуклая область
        x: Внутренняя точка
        xi: Касательный вектор

    Returns:
        Неотрицательное значение
    """
    x = domain.require_inside(x, 'tautological_lagrangian')
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    if not np.any(xi != 0):
        return 0.0

    if domain.kind == 'half_space':
        return max(float(np.dot(domain.normal, xi) / (domain.offset - np.dot(domain.normal, x))), 0.0)

    lam = domain.exit_parameter(x, xi)
    if not np.isfinite(lam):
        return 0.0
    return 1.0 / lam


def t_length(domain: ConvexDomain, curve: Curve, temp: TemperatureLike, n_cells: int = 1000) -> float:
    """
    Прямая t-длина кривой: t-интеграл F(γ(s), γ̇(s)) по [0, 1]

    Args:
        domain: Выпуклая область
        curve: Кривая внутри области
        temp: Температура
        n_cells: Число ячеек (середины ячеек)

    Returns:
        t-длина
    """
    temp = as_temperature(temp)
    width = 1.0 / n_cells
    midpoints = (np.arange(n_cells) + 0.5) * width
    terms = np.empty(n_cells)
    for i, s in enumerate(midpoints):
        point = curve.point(s)
        if not domain.contains(point):
            raise DomainError(f"t_length: кривая выходит из области при s={s}, точка {point}")
        terms[i] = width * tautological_lagrangian(domain, point, curve.speed_vector(s))
    return float(t_sum(terms, temp))


def halfspace_t_funk(normal, offset: float, r, s, temp: TemperatureLike) -> float:
    """Тавтологическое t-расстояние полупространства max(log_t((c - ν·r)/(c - ν·s)), 0)"""
    normal = np.atleast_1d(np.asarray(normal, dtype=float))
    gap_r = offset - float(np.dot(normal, r))
    gap_s = offset - float(np.dot(normal, s))
    if gap_r <= 0 or gap_s <= 0:
        raise DomainError(f"halfspace_t_funk: точки r={r}, s={s} вне полупространства")
    return max(float(log_t(gap_r / gap_s, temp)), 0.0)


def t_geodesic_point(domain: ConvexDomain, r, xi, tau: float, temp: TemperatureLike) -> np.ndarray:
    """
    Точка единичной скорости линейной t-геодезической

    γ(τ) = r + ((1 - exp_t(⊖_t τ)) / F(r, ξ)) ξ, так что ρ_f(r, γ(τ)) = τ.

    Args:
        domain: Выпуклая область
        r: Начальная точка
        xi: Направление
        tau: Параметр (t-расстояние от r)
        temp: Температура

    Returns:
        Точка γ(τ)
    """
    temp = as_temperature(temp)
    r = domain.require_inside(r, 't_geodesic_point')
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    lagrangian = tautological_lagrangian(domain, r, xi)
    if lagrangian <= 0:
        raise DomainError(f"t_geodesic_point: F(r, ξ) = 0, луч r + R_+ ξ не выходит из области")
    if is_clipped(tau, temp):
        raise DomainError(f"t_geodesic_point: τ={tau} отсекается exp_t при t={temp.t}")

    remaining = float(exp_t(t_neg(tau, temp), temp))
    if remaining <= 0:
        raise DomainError(f"t_geodesic_point: exp_t(⊖_t τ) = 0 при τ={tau}, t={temp.t}")
    return r + ((1.0 - remaining) / lagrangian) * xi
