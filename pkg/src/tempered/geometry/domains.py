"""
Выпуклые области: симплекс, евклидов шар, полупространство
"""

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..errors import DomainError

# Допуск принадлежности аффинной оболочке симплекса
SIMPLEX_TOLERANCE = 1e-9


class _AtInfinity:
    """Точка на бесконечности: луч целиком лежит в области"""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'AT_INFINITY'

    def __bool__(self) -> bool:
        return False


AT_INFINITY = _AtInfinity()

BoundaryPoint = Union[np.ndarray, _AtInfinity]


@dataclass(frozen=True, eq=False)
class ConvexDomain:
    """
    Открытая выпуклая область

    Attributes:
        kind: 'simplex', 'ball' или 'half_space'
        dimension: Размерность объемлющего пространства
        center: Центр шара
        radius: Радиус шара
        normal: Нормаль ν полупространства {x : ν·x <= c}
        offset: Сдвиг c полупространства
    """

    kind: str
    dimension: int
    center: Optional[np.ndarray] = None
    radius: float = 0.0
    normal: Optional[np.ndarray] = None
    offset: float = 0.0

    @classmethod
    def simplex(cls, d: int) -> 'ConvexDomain':
        """Вероятностный симплекс {x in R^d : x > 0, Σ x = 1}"""
        if d < 2:
            raise DomainError(f"Симплекс требует d >= 2, получено d={d}")
        return cls('simplex', d)

    @classmethod
    def ball(cls, center, radius: float) -> 'ConvexDomain':
        """Евклидов шар ||x - center|| < radius"""
        center = np.atleast_1d(np.asarray(center, dtype=float))
        if radius <= 0:
            raise DomainError(f"Радиус шара должен быть положительным: {radius}")
        return cls('ball', int(center.size), center=center, radius=float(radius))

    @classmethod
    def unit_ball(cls, dimension: int) -> 'ConvexDomain':
        return cls.ball(np.zeros(dimension), 1.0)

    @classmethod
    def half_space(cls, normal, offset: float) -> 'ConvexDomain':
        """Полупространство ν·x < c"""
        normal = np.atleast_1d(np.asarray(normal, dtype=float))
        if not np.any(normal != 0):
            raise DomainError("Нормаль полупространства не может быть нулевой")
        return cls('half_space', int(normal.size), normal=normal, offset=float(offset))

    def contains(self, x) -> bool:
        """Строгая принадлежность открытой области"""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if x.size != self.dimension or not np.all(np.isfinite(x)):
            return False
        if self.kind == 'simplex':
            return bool(np.all(x > 0) and abs(np.sum(x) - 1.0) < SIMPLEX_TOLERANCE)
        if self.kind == 'ball':
            return bool(np.linalg.norm(x - self.center) < self.radius)
        return bool(np.dot(self.normal, x) < self.offset)

    def require_inside(self, x, operation: str) -> np.ndarray:
        x = np.atleast_1d(np.asarray(x, dtype=float))
        if not self.contains(x):
            raise DomainError(f"{operation}: точка {x} вне области {self.kind}")
        return x

    def exit_parameter(self, x, direction) -> float:
        """
        Наименьшее λ > 0 с x + λ·direction на границе (inf, если луч не выходит)

        Args:
            x: Внутренняя точка
            direction: Направление луча

        Returns:
            Параметр выхода λ
        """
        x = np.atleast_1d(np.asarray(x, dtype=float))
        v = np.atleast_1d(np.asarray(direction, dtype=float))

        if self.kind == 'simplex':
            decreasing = v < 0
            if not np.any(decreasing):
                return np.inf
            return float(np.min(x[decreasing] / -v[decreasing]))

        if self.kind == 'ball':
            w = x - self.center
            a = float(np.dot(v, v))
            if a == 0:
                return np.inf
            b = float(np.dot(w, v))
            c = float(np.dot(w, w)) - self.radius ** 2
            return float((-b + np.sqrt(b * b - a * c)) / a)

        rate = float(np.dot(self.normal, v))
        if rate <= 0:
            return np.inf
        return float((self.offset - np.dot(self.normal, x)) / rate)


def ray_boundary(domain: ConvexDomain, r, s) -> BoundaryPoint:
    """
    Пересечение луча из r через s с границей области

    Args:
        domain: Выпуклая область
        r: Начало луча (внутренняя точка)
        s: Вторая точка луча (внутренняя, s != r)

    Returns:
        Точка s̄ на границе или AT_INFINITY
    """
    r = domain.require_inside(r, 'ray_boundary')
    s = domain.require_inside(s, 'ray_boundary')
    direction = s - r
    if not np.any(direction != 0):
        raise DomainError(f"ray_boundary: точки совпадают r=s={r}")

    lam = domain.exit_parameter(r, direction)
    if not np.isfinite(lam):
        return AT_INFINITY

    point = r + lam * direction
    if domain.kind == 'simplex':
        # Компонента, через которую выходит луч, обнуляется точно
        hits = np.full(r.shape, np.inf)
        decreasing = direction < 0
        hits[decreasing] = r[decreasing] / -direction[decreasing]
        point[np.argmin(hits)] = 0.0
    return point
