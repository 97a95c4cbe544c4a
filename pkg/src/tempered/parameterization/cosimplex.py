"""
Точки ко-симплекса (дискретные темперированные меры)

Точка p̃ лежит на ко-симплексе, если ее ко-плотность p = p̃^{1/t*}
является вероятностным вектором.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np

from ..algebra import Temperature, TemperatureLike, as_temperature
from ..errors import DomainError

# Минимальная компонента ко-плотности внутренней точки
INTERIOR_EPS = 1e-12

# Допустимый дрейф нормировки, который исправляется молча
DRIFT_TOLERANCE = 1e-6

# Нижняя граница компонент при генерации случайных точек
SAMPLE_FLOOR = 1e-9


def _normalized_codensity(codensity: np.ndarray, operation: str) -> np.ndarray:
    total = float(np.sum(codensity))
    if not np.isfinite(total) or abs(total - 1.0) > DRIFT_TOLERANCE:
        raise DomainError(
            f"{operation}: сумма ко-плотности {total} отличается от 1 более чем на {DRIFT_TOLERANCE}"
        )
    return codensity / total


@dataclass(frozen=True, eq=False)
class CoSimplexPoint:
    """
    Дискретная темперированная мера p̃ на ко-симплексе Δ̃_t^d

    Attributes:
        values: Положительные компоненты p̃
        temp: Температура
        interior: Требовать ли строгую внутренность (False для граничных
            точек темперированного softmax при t < 1)
    """

    values: np.ndarray
    temp: Temperature
    interior: bool = field(default=True, repr=False)

    def __post_init__(self):
        temp = as_temperature(self.temp)
        values = np.array(self.values, dtype=float).reshape(-1)

        if values.size == 0:
            raise DomainError("CoSimplexPoint: пустой вектор")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise DomainError(f"CoSimplexPoint: компоненты должны быть конечны и неотрицательны: {values}")

        codensity = _normalized_codensity(values ** (2.0 - temp.t), 'CoSimplexPoint')
        if self.interior and np.min(codensity) <= INTERIOR_EPS:
            raise DomainError(
                f"CoSimplexPoint: точка не внутренняя, минимальная компонента ко-плотности {np.min(codensity)}"
            )

        # Перенормировка через ко-плотность
        values = codensity ** temp.t_star
        values.setflags(write=False)
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'temp', temp)

    @property
    def dim(self) -> int:
        """Размерность d"""
        return int(self.values.size)

    @property
    def t(self) -> float:
        return self.temp.t

    def codensity(self) -> np.ndarray:
        """Ко-плотность p = p̃^{1/t*}"""
        return self.values ** (2.0 - self.temp.t)

    @classmethod
    def from_probability(cls, p: Sequence[float], temp: TemperatureLike) -> 'CoSimplexPoint':
        """
        Поднять вероятностный вектор на ко-симплекс: p̃ = p^{t*}

        Args:
            p: Строго положительный вероятностный вектор
            temp: Температура

        Returns:
            Точка ко-симплекса
        """
        temp = as_temperature(temp)
        probs = np.asarray(p, dtype=float).reshape(-1)
        if probs.size == 0 or np.any(~(probs > 0)):
            raise DomainError(f"from_probability: компоненты должны быть положительны: {probs}")
        probs = _normalized_codensity(probs, 'from_probability')
        return cls(probs ** temp.t_star, temp)

    @classmethod
    def from_raw(cls, x: Sequence[float], temp: TemperatureLike) -> 'CoSimplexPoint':
        """Нормировать произвольный положительный вектор как ко-плотность и поднять"""
        raw = np.asarray(x, dtype=float).reshape(-1)
        if raw.size == 0 or np.any(~(raw > 0)) or not np.all(np.isfinite(raw)):
            raise DomainError(f"from_raw: нужен положительный конечный вектор: {raw}")
        return cls.from_probability(raw / np.sum(raw), temp)

    @classmethod
    def from_measure(cls, x: Sequence[float], temp: TemperatureLike) -> 'CoSimplexPoint':
        """
        Проективная нормировка положительной меры: c·x с Σ (c x_i)^{1/t*} = 1

        Отношения компонент сохраняются, поэтому t-Гильберт не меняется.
        """
        temp = as_temperature(temp)
        raw = np.asarray(x, dtype=float).reshape(-1)
        if raw.size == 0 or np.any(~(raw > 0)) or not np.all(np.isfinite(raw)):
            raise DomainError(f"from_measure: нужен положительный конечный вектор: {raw}")
        weights = raw ** (2.0 - temp.t)
        return cls.from_probability(weights / np.sum(weights), temp)

    def to_dict(self) -> Dict[str, Any]:
        """Словарь {"t": ..., "values": [...]}"""
        return {'t': self.temp.t, 'values': [float(v) for v in self.values]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'CoSimplexPoint':
        try:
            return cls(np.asarray(data['values'], dtype=float), Temperature(float(data['t'])))
        except KeyError as e:
            raise DomainError(f"CoSimplexPoint.from_dict: отсутствует поле {e}")

    @classmethod
    def from_json(cls, text: str) -> 'CoSimplexPoint':
        return cls.from_dict(json.loads(text))


def codensity(p_tilde: CoSimplexPoint) -> np.ndarray:
    """
    Ко-плотность p = p̃^{1/t*}

    Args:
        p_tilde: Точка ко-симплекса

    Returns:
        Вероятностный вектор
    """
    return p_tilde.codensity()


def from_probability(p: Sequence[float], temp: TemperatureLike) -> CoSimplexPoint:
    """Обратная к codensity операция: p̃ = p^{t*}"""
    return CoSimplexPoint.from_probability(p, temp)


def check_compatible(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint, operation: str) -> None:
    """Проверить совпадение температуры и размерности двух точек"""
    if p_tilde.dim != q_tilde.dim:
        raise DomainError(f"{operation}: разные размерности {p_tilde.dim} и {q_tilde.dim}")
    if abs(p_tilde.temp.t - q_tilde.temp.t) > 0:
        raise DomainError(f"{operation}: разные температуры t={p_tilde.temp.t} и t={q_tilde.temp.t}")


def random_probability(rng: np.random.Generator, d: int) -> np.ndarray:
    """Плоское распределение Дирихле с нижней границей компонент SAMPLE_FLOOR"""
    p = rng.dirichlet(np.ones(d))
    p = np.maximum(p, SAMPLE_FLOOR)
    return p / np.sum(p)


def random_cosimplex(rng: np.random.Generator, d: int, temp: TemperatureLike,
                     n: Optional[int] = None) -> Union[CoSimplexPoint, List[CoSimplexPoint]]:
    """
    Случайные точки ко-симплекса: ко-плотности из плоского Дирихле, поднятые на Δ̃_t^d

    Args:
        rng: Генератор numpy
        d: Размерность
        temp: Температура
        n: Количество точек (None - одна точка)

    Returns:
        Точка или список точек
    """
    temp = as_temperature(temp)
    if n is None:
        return CoSimplexPoint.from_probability(random_probability(rng, d), temp)
    return [CoSimplexPoint.from_probability(random_probability(rng, d), temp) for _ in range(n)]
