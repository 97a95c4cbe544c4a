"""
Геометрии вложения: евклидова, гиперболоид Минковского, симплекс Гильберта, t-Гильберт

Точки задаются в карте геометрии:
- euclidean: координаты R^dim;
- hyperboloid: пространственные координаты y, точка x = (sqrt(1 + |y|²), y);
- hilbert_simplex / t_hilbert: лог-координаты u in R^dim.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
from scipy.special import logsumexp, softmax

from ..algebra import Temperature, log_t_exp, log_t_exp_derivative
from ..errors import ChartError, DomainError

KINDS = ('euclidean', 'hyperboloid', 'hilbert_simplex', 't_hilbert')

# Допуск на -<x, y>_M < 1 из-за округления
MINKOWSKI_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GeometryKind:
    """
    Тип геометрии

    Attributes:
        name: Одно из KINDS
        t: Температура (только для t_hilbert)
    """

    name: str
    t: float = 1.0

    def __post_init__(self):
        if self.name not in KINDS:
            raise DomainError(f"Неизвестная геометрия '{self.name}', ожидается одна из {KINDS}")
        Temperature(self.t)

    @classmethod
    def parse(cls, name: str, t: float = 1.0) -> 'GeometryKind':
        """Разобрать имя геометрии ('hilbert' - синоним hilbert_simplex)"""
        name = name.strip().lower().replace('-', '_')
        if name == 'hilbert':
            name = 'hilbert_simplex'
        if name != 't_hilbert':
            t = 1.0
        return cls(name, t)

    @property
    def is_hilbert_family(self) -> bool:
        return self.name in ('hilbert_simplex', 't_hilbert')

    @property
    def temperature(self) -> Temperature:
        return Temperature(self.t if self.name == 't_hilbert' else 1.0)

    @property
    def label(self) -> str:
        return self.name


def lift_to_hyperboloid(Y: np.ndarray) -> np.ndarray:
    """Временная координата x0 = sqrt(1 + |y|²) для строк Y"""
    return np.sqrt(1.0 + np.sum(np.atleast_2d(Y) ** 2, axis=-1))


def minkowski_product(x: np.ndarray, y: np.ndarray) -> float:
    """<x, y>_M = -x0 y0 + Σ x_i y_i"""
    return float(-x[0] * y[0] + np.dot(x[1:], y[1:]))


def exp_map_zero(V: np.ndarray) -> np.ndarray:
    """
    Экспоненциальное отображение в начале гиперболоида

    Возвращает пространственные координаты sinh(|v|) v / |v|.
    """
    V = np.atleast_2d(np.asarray(V, dtype=float))
    norms = np.linalg.norm(V, axis=1, keepdims=True)
    safe = np.maximum(norms, 1e-12)
    return np.sinh(safe) * V / safe


def _classic_hilbert(w: np.ndarray) -> np.ndarray:
    """max - min по последней оси"""
    return np.max(w, axis=-1) - np.min(w, axis=-1)


def geometry_distance(kind: GeometryKind, y1, y2) -> float:
    """
    Точное расстояние между двумя точками карты

    Args:
        kind: Геометрия
        y1: Первая точка
        y2: Вторая точка

    Returns:
        Неотрицательное расстояние
    """
    y1 = np.atleast_1d(np.asarray(y1, dtype=float))
    y2 = np.atleast_1d(np.asarray(y2, dtype=float))
    if y1.shape != y2.shape:
        raise ChartError(f"geometry_distance: разные размерности {y1.shape} и {y2.shape}")
    if np.array_equal(y1, y2):
        return 0.0

    if kind.name == 'euclidean':
        return float(np.linalg.norm(y1 - y2))

    if kind.name == 'hyperboloid':
        x1 = np.concatenate([lift_to_hyperboloid(y1), y1])
        x2 = np.concatenate([lift_to_hyperboloid(y2), y2])
        a = -minkowski_product(x1, x2)
        if a < 1.0 - MINKOWSKI_TOLERANCE:
            raise ChartError(f"geometry_distance: -<x, y>_M = {a} < 1, точки вне гиперболоида")
        return float(np.arccosh(max(a, 1.0)))

    classic = float(_classic_hilbert(y1 - y2))
    if kind.name == 'hilbert_simplex':
        return classic
    return float(log_t_exp(classic, kind.temperature))


def pairwise_distances(kind: GeometryKind, Y) -> np.ndarray:
    """
    Матрица точных попарных расстояний

    Args:
        kind: Геометрия
        Y: Матрица n×dim точек карты

    Returns:
        Матрица n×n
    """
    Y = np.atleast_2d(np.asarray(Y, dtype=float))

    if kind.name == 'euclidean':
        diff = Y[:, None, :] - Y[None, :, :]
        return np.sqrt(np.sum(diff ** 2, axis=-1))

    if kind.name == 'hyperboloid':
        x0 = lift_to_hyperboloid(Y)
        a = np.outer(x0, x0) - Y @ Y.T
        if np.any(a < 1.0 - MINKOWSKI_TOLERANCE):
            raise ChartError("pairwise_distances: точки вне гиперболоида")
        D = np.arccosh(np.maximum(a, 1.0))
        np.fill_diagonal(D, 0.0)
        return D

    classic = _classic_hilbert(Y[:, None, :] - Y[None, :, :])
    if kind.name == 'hilbert_simplex':
        return classic
    return np.asarray(log_t_exp(classic, kind.temperature))


def smoothed_distances_and_jacobian(kind: GeometryKind, Y: np.ndarray, T: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Попарные расстояния, используемые при оптимизации, и производные ∂ρ_ij/∂y_i

    Для семейства Гильберта расстояние сглажено: классический Гильберт
    заменяется на LSE(T w) + LSE(-T w), w = u_i - u_j, затем применяется
    связь log_t exp. При t = 1 это diff_hilbert на векторах exp(u) с тем же T.

    Args:
        kind: Геометрия
        Y: Матрица n×dim
        T: Сглаживание

    Returns:
        (ρ: n×n, J: n×n×dim), J[i, j] = ∂ρ_ij/∂y_i
    """
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    diff = Y[:, None, :] - Y[None, :, :]

    if kind.name == 'euclidean':
        rho = np.sqrt(np.sum(diff ** 2, axis=-1))
        safe = np.where(rho > 0, rho, 1.0)
        jac = np.where((rho > 0)[:, :, None], diff / safe[:, :, None], 0.0)
        return rho, jac

    if kind.name == 'hyperboloid':
        x0 = lift_to_hyperboloid(Y)
        a = np.outer(x0, x0) - Y @ Y.T
        if np.any(a < 1.0 - MINKOWSKI_TOLERANCE):
            raise ChartError("smoothed_distances_and_jacobian: точки вне гиперболоида")
        a = np.maximum(a, 1.0)
        rho = np.arccosh(a)
        gap = a * a - 1.0
        slope = np.where(gap > 1e-14, 1.0 / np.sqrt(np.where(gap > 1e-14, gap, 1.0)), 0.0)
        # ∂a_ij/∂y_i = x0_j y_i / x0_i - y_j
        da = (x0[None, :, None] * Y[:, None, :] / x0[:, None, None]) - Y[None, :, :]
        return rho, slope[:, :, None] * da

    scaled = T * diff
    smooth = (logsumexp(scaled, axis=-1) + logsumexp(-scaled, axis=-1)) / T
    direction = softmax(scaled, axis=-1) - softmax(-scaled, axis=-1)
    temp = kind.temperature
    rho = np.asarray(log_t_exp(smooth, temp))
    link = np.asarray(log_t_exp_derivative(smooth, temp))
    return rho, link[:, :, None] * direction


def sample_in_geometry(kind: GeometryKind, n: int, dim: int, rng: np.random.Generator,
                       scale: float = 1.0) -> np.ndarray:
    """
    Случайные точки карты для проверки самосогласованности

    Args:
        kind: Геометрия
        n: Число точек
        dim: Размерность карты
        rng: Генератор
        scale: Масштаб

    Returns:
        Матрица n×dim
    """
    V = scale * rng.standard_normal((n, dim))
    if kind.name == 'hyperboloid':
        return exp_map_zero(V)
    if kind.is_hilbert_family:
        return V - np.mean(V, axis=1, keepdims=True)
    return V


def initial_chart(kind: GeometryKind, n: int, dim: int, rng: np.random.Generator,
                  scale: float = 0.1) -> np.ndarray:
    """Начальная карта: N(0, scale²); гиперболоид - через касательное пространство в начале"""
    V = scale * rng.standard_normal((n, dim))
    if kind.name == 'hyperboloid':
        return exp_map_zero(V)
    return V


def retract(kind: GeometryKind, Y: np.ndarray) -> np.ndarray:
    """
    Вернуть координаты в карту после шага

    Лог-координаты семейства Гильберта центрируются (расстояние не
    меняется при сдвиге на константу); прочие карты - все R^dim.
    """
    if not np.all(np.isfinite(Y)):
        raise ChartError("retract: нечисловые координаты карты")
    if kind.is_hilbert_family:
        return Y - np.mean(Y, axis=1, keepdims=True)
    return Y
