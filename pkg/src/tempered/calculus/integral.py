"""
Римановы t-суммы и t-интеграл
"""

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from ..algebra import TemperatureLike, as_temperature, t_fold, t_neg, t_sub, t_sum
from ..errors import DomainError

RealFunction = Callable[[float], float]


@dataclass(frozen=True, eq=False)
class Division:
    """
    Разбиение отрезка [a, b]

    Attributes:
        knots: Строго возрастающие узлы x_0 = a < ... < x_n = b
        sample_points: Точки ξ_i внутри (x_{i-1}, x_i)
    """

    knots: np.ndarray
    sample_points: np.ndarray

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=float)
        points = np.asarray(self.sample_points, dtype=float)
        if knots.ndim != 1 or knots.size < 2:
            raise DomainError("Division: нужно не меньше двух узлов")
        if np.any(np.diff(knots) <= 0):
            raise DomainError("Division: узлы должны строго возрастать")
        if points.shape != (knots.size - 1,):
            raise DomainError(f"Division: ожидается {knots.size - 1} точек, получено {points.shape}")
        if np.any(points <= knots[:-1]) or np.any(points >= knots[1:]):
            raise DomainError("Division: точки ξ_i должны лежать строго внутри ячеек")
        object.__setattr__(self, 'knots', knots)
        object.__setattr__(self, 'sample_points', points)

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.knots)

    @property
    def step(self) -> float:
        """Шаг разбиения s(Δ) = max |I_i|"""
        return float(np.max(self.widths))

    @property
    def cells(self) -> int:
        return int(self.sample_points.size)


def uniform_division(a: float, b: float, n: int) -> Division:
    """
    Равномерное разбиение с серединами ячеек

    Args:
        a: Левый конец
        b: Правый конец (b > a)
        n: Число ячеек

    Returns:
        Division
    """
    if n < 1:
        raise DomainError(f"uniform_division: число ячеек должно быть положительным, получено {n}")
    knots = np.linspace(a, b, n + 1)
    return Division(knots, 0.5 * (knots[:-1] + knots[1:]))


def _evaluate(f: RealFunction, points: np.ndarray) -> np.ndarray:
    return np.array([float(f(x)) for x in points])


def riemann_t_sum(f: RealFunction, division: Division, temp: TemperatureLike,
                  order: Optional[Sequence[int]] = None) -> float:
    """
    Риманова t-сумма (⊕_t)_i |I_i| f(ξ_i)

    Args:
        f: Непрерывная функция
        division: Разбиение
        temp: Температура
        order: Перестановка ячеек для последовательного накопления
            (None - накопление через произведение скобок)

    Returns:
        Значение t-суммы
    """
    temp = as_temperature(temp)
    terms = division.widths * _evaluate(f, division.sample_points)
    if order is not None:
        if sorted(order) != list(range(division.cells)):
            raise DomainError(f"riemann_t_sum: {list(order)} не является перестановкой ячеек")
        return t_fold(terms, temp, order)
    return float(t_sum(terms, temp))


def t_integral(primitive: RealFunction, a: float, b: float, temp: TemperatureLike) -> float:
    """
    t-интеграл через t-первообразную: F(b) ⊖_t F(a)

    Args:
        primitive: t-первообразная F (D_t F = f)
        a: Левый конец
        b: Правый конец
        temp: Температура

    Returns:
        Значение t-интеграла
    """
    return float(t_sub(float(primitive(b)), float(primitive(a)), temp))


def t_integral_numeric(f: RealFunction, a: float, b: float, temp: TemperatureLike, n_cells: int = 1000) -> float:
    """
    Численный t-интеграл: t-сумма на равномерном разбиении с серединами

    При a > b возвращается ⊖_t от интеграла по [b, a], как и F(b) ⊖_t F(a).
    """
    if a == b:
        return 0.0
    if a > b:
        return float(t_neg(t_integral_numeric(f, b, a, temp, n_cells), temp))
    return riemann_t_sum(f, uniform_division(a, b, n_cells), temp)
