"""
Модели Клейна и Пуанкаре в единичном шаре и их t-варианты
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Union

import numpy as np
import pandas as pd
from scipy.optimize import bisect

from ..algebra import TemperatureLike, as_temperature, log_t_exp
from ..errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

MODELS = ('klein', 'poincare')

# χ в t-расстояниях моделей
MODEL_CHI = 0.5

ROOT_TOLERANCE = 1e-10
ROOT_MAXITER = 200


@dataclass(frozen=True, eq=False)
class DiskPoint:
    """Точка открытого единичного шара"""

    coords: np.ndarray

    def __post_init__(self):
        coords = np.atleast_1d(np.asarray(self.coords, dtype=float))
        if coords.ndim != 1 or not np.all(np.isfinite(coords)):
            raise DomainError(f"DiskPoint: ожидается конечный вектор, получено {self.coords}")
        norm = float(np.linalg.norm(coords))
        if norm >= 1.0:
            raise DomainError(f"DiskPoint: ||x|| = {norm} >= 1, точка {coords.tolist()} вне открытого шара")
        object.__setattr__(self, 'coords', coords)

    @property
    def norm_sq(self) -> float:
        return float(np.dot(self.coords, self.coords))

    def __len__(self) -> int:
        return len(self.coords)


PointLike = Union[DiskPoint, Iterable[float]]


def _point(x: PointLike) -> DiskPoint:
    return x if isinstance(x, DiskPoint) else DiskPoint(np.asarray(x, dtype=float))


def _pair(r: PointLike, s: PointLike):
    r, s = _point(r), _point(s)
    if len(r) != len(s):
        raise DomainError(f"Точки разной размерности: {len(r)} и {len(s)}")
    return r, s


def psi(u, temp: TemperatureLike, chi: float = 1.0):
    """
    ψ_{t,χ}(u) = χ·log_t exp(u/χ)

    Args:
        u: Неотрицательное расстояние (скаляр или массив)
        temp: Температура
        chi: Положительный масштаб

    Returns:
        Преобразованное расстояние
    """
    if chi <= 0:
        raise DomainError(f"psi: χ должно быть положительным, получено {chi}")
    arr = np.asarray(u, dtype=float)
    if np.any(arr < 0):
        raise DomainError(f"psi: расстояние должно быть неотрицательным, получено {u}")
    out = chi * np.asarray(log_t_exp(arr / chi, temp))
    return float(out) if np.ndim(u) == 0 else out


def klein_distance(r: PointLike, s: PointLike) -> float:
    """arccosh((1 - r·s) / sqrt((1 - |r|²)(1 - |s|²)))"""
    r, s = _pair(r, s)
    if np.array_equal(r.coords, s.coords):
        return 0.0
    value = (1.0 - float(np.dot(r.coords, s.coords))) / np.sqrt((1.0 - r.norm_sq) * (1.0 - s.norm_sq))
    return float(np.arccosh(max(value, 1.0)))


def poincare_distance(r: PointLike, s: PointLike) -> float:
    """arccosh(1 + 2|r - s|² / ((1 - |r|²)(1 - |s|²)))"""
    r, s = _pair(r, s)
    if np.array_equal(r.coords, s.coords):
        return 0.0
    gap = float(np.sum((r.coords - s.coords) ** 2))
    return float(np.arccosh(1.0 + 2.0 * gap / ((1.0 - r.norm_sq) * (1.0 - s.norm_sq))))


def tempered_klein(r: PointLike, s: PointLike, temp: TemperatureLike) -> float:
    return psi(klein_distance(r, s), temp, MODEL_CHI)


def tempered_poincare(r: PointLike, s: PointLike, temp: TemperatureLike) -> float:
    return psi(poincare_distance(r, s), temp, MODEL_CHI)


def model_distance(model: str, r: PointLike, s: PointLike, temp: TemperatureLike) -> float:
    """t-расстояние в выбранной модели"""
    if model == 'klein':
        return tempered_klein(r, s, temp)
    if model == 'poincare':
        return tempered_poincare(r, s, temp)
    raise DomainError(f"Неизвестная модель '{model}', ожидается одна из {MODELS}")


def klein_to_poincare(k: PointLike) -> DiskPoint:
    """
    Радиальное отображение k -> ((1 - sqrt(1 - |k|²)) / |k|²)·k

    Записано как k / (1 + sqrt(1 - |k|²)): без особенности в нуле.
    """
    k = _point(k)
    return DiskPoint(k.coords / (1.0 + np.sqrt(1.0 - k.norm_sq)))


def poincare_to_klein(p: PointLike) -> DiskPoint:
    """Обратное отображение p -> 2p / (1 + |p|²)"""
    p = _point(p)
    return DiskPoint(2.0 * p.coords / (1.0 + p.norm_sq))


def _klein_fractional(r: DiskPoint, s: DiskPoint, alpha: float, temp) -> DiskPoint:
    """Точка на отрезке [r, s] с ρ(r, x) = α·ρ(r, s) в t-модели Клейна"""
    target = alpha * tempered_klein(r, s, temp)
    direction = s.coords - r.coords

    def gap(lam: float) -> float:
        return tempered_klein(r, r.coords + lam * direction, temp) - target

    try:
        lam = bisect(gap, 0.0, 1.0, xtol=ROOT_TOLERANCE, maxiter=ROOT_MAXITER)
    except RuntimeError as e:
        raise ConvergenceError(
            f"fractional_point: бисекция не сошлась за {ROOT_MAXITER} шагов "
            f"(r={r.coords.tolist()}, s={s.coords.tolist()}, α={alpha}, t={temp.t}): {e}"
        ) from e
    return DiskPoint(r.coords + lam * direction)


def fractional_point(r: PointLike, s: PointLike, alpha: float, temp: TemperatureLike,
                     model: str = 'klein') -> DiskPoint:
    """
    Точка геодезической от r к s на доле α t-расстояния

    В модели Клейна геодезические - отрезки, параметр находится бисекцией.
    Для Пуанкаре задача решается в Клейне и переносится обратно радиальным
    отображением.

    Args:
        r: Начальная точка
        s: Конечная точка (r != s)
        alpha: Доля в [0, 1]
        temp: Температура
        model: 'klein' или 'poincare'

    Returns:
        DiskPoint
    """
    temp = as_temperature(temp)
    r, s = _pair(r, s)
    if model not in MODELS:
        raise DomainError(f"Неизвестная модель '{model}', ожидается одна из {MODELS}")
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"fractional_point: α должно лежать в [0, 1], получено {alpha}")
    if np.array_equal(r.coords, s.coords):
        raise DomainError(f"fractional_point: совпадающие концы {r.coords.tolist()}")
    if alpha == 0.0:
        return r
    if alpha == 1.0:
        return s

    if model == 'klein':
        return _klein_fractional(r, s, alpha, temp)
    x = _klein_fractional(poincare_to_klein(r), poincare_to_klein(s), alpha, temp)
    return klein_to_poincare(x)


def fractional_sweep(r: PointLike, s: PointLike, alphas: Iterable[float], ts: Iterable[float],
                     model: str = 'klein') -> pd.DataFrame:
    """
    Таблица дробных точек для сетки (t, α) в двумерном шаре

    Returns:
        DataFrame со столбцами model, t, alpha, x, y
    """
    r, s = _pair(r, s)
    if len(r) != 2:
        raise DomainError(f"fractional_sweep: ожидается двумерный диск, получено {len(r)}")
    alphas, ts = list(alphas), list(ts)
    logger.info(f"🔄 Дробные точки {model}: {len(ts)} температур × {len(alphas)} долей")
    rows: List[dict] = []
    for t in ts:
        for alpha in alphas:
            x = fractional_point(r, s, alpha, t, model)
            rows.append({'model': model, 't': float(t), 'alpha': float(alpha),
                         'x': float(x.coords[0]), 'y': float(x.coords[1])})
    return pd.DataFrame(rows, columns=['model', 't', 'alpha', 'x', 'y'])
