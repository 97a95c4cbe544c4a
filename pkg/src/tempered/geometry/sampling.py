"""
Сеточная выборка шаров и бисектрис на 2-симплексе

Точки сетки - внутренние барицентрические узлы (i, j, k)/n, i + j + k = n.
Результат - pandas DataFrame со столбцами x, y, value, где x, y - первые
две координаты ко-плотности.
"""

import logging
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from ..algebra import TemperatureLike, as_temperature, log_t_exp, t_add, t_sub
from ..config import settings
from ..errors import DomainError
from ..parameterization import CoSimplexPoint, constrained_link
from .distances import classic_scale, t_nh_norm

logger = logging.getLogger(__name__)

BALL_KINDS = ('t-HG', 't-NH', 't-dHG')

# Множитель диаметра ячейки в допуске бисектрисы
CELL_TOLERANCE_FACTOR = 1.5

# Направления к соседним узлам барицентрической сетки
_LATTICE_STEPS = np.array([[1, -1, 0], [0, 1, -1], [-1, 0, 1]], dtype=float)


def simplex_grid(resolution: int) -> np.ndarray:
    """
    Внутренние узлы барицентрической сетки 2-симплекса

    Args:
        resolution: Число делений стороны n

    Returns:
        Матрица m×3 ко-плотностей
    """
    if resolution < 3:
        raise DomainError(f"Разрешение сетки должно быть не меньше 3, получено {resolution}")
    i, j = np.meshgrid(np.arange(1, resolution), np.arange(1, resolution), indexing='ij')
    i = i.ravel()
    j = j.ravel()
    keep = i + j <= resolution - 1
    i, j = i[keep], j[keep]
    k = resolution - i - j
    return np.stack([i, j, k], axis=1).astype(float) / resolution


def _classic_hilbert_rows(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Классический Гильберт между строками X и вектором y (ко-плотности)"""
    logs = np.log(X) - np.log(y)[None, :]
    return np.max(logs, axis=1) - np.min(logs, axis=1)


def _classic_hilbert_pairs(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    logs = np.log(X) - np.log(Y)
    return np.max(logs, axis=1) - np.min(logs, axis=1)


def _t_hilbert_rows(grid: np.ndarray, center_density: np.ndarray, temp) -> np.ndarray:
    """t-Гильберт ко-симплекса от узлов сетки до центра: log_t exp(t* · классический)"""
    return np.asarray(log_t_exp(temp.t_star * _classic_hilbert_rows(grid, center_density), temp))


def cell_diameter(grid: np.ndarray, resolution: int) -> np.ndarray:
    """
    Диаметр ячейки в единицах классического расстояния Гильберта

    Для каждого узла - максимум расстояния до соседей по трем направлениям
    сетки (если сосед вне симплекса, берется противоположный).
    """
    diameters = np.zeros(len(grid))
    for step in _LATTICE_STEPS:
        forward = grid + step / resolution
        backward = grid - step / resolution
        use_forward = np.all(forward > 0, axis=1)
        neighbor = np.where(use_forward[:, None], forward, backward)
        valid = np.all(neighbor > 0, axis=1)
        safe = np.where(valid[:, None], neighbor, grid)
        diameters = np.maximum(diameters, np.where(valid, _classic_hilbert_pairs(grid, safe), 0.0))
    return diameters


def _frame(grid: np.ndarray, values: np.ndarray) -> pd.DataFrame:
    return pd.DataFrame({'x': grid[:, 0], 'y': grid[:, 1], 'value': values})


def sample_ball(center: CoSimplexPoint, radius: float, grid_resolution: Optional[int] = None,
                temp: Optional[TemperatureLike] = None, which: str = 't-HG',
                smoothing_T: Optional[float] = None) -> pd.DataFrame:
    """
    Узлы сетки внутри шара заданного радиуса

    Args:
        center: Центр шара (точка ко-симплекса, d = 3)
        radius: Радиус
        grid_resolution: Разрешение сетки (по умолчанию из настроек)
        temp: Температура (по умолчанию температура центра)
        which: 't-HG' (область), 't-NH' (поверхность ограниченных параметров)
            или 't-dHG' (дифференцируемый t-Гильберт)
        smoothing_T: Сглаживание для 't-dHG'

    Returns:
        DataFrame x, y, value (value - расстояние до центра)
    """
    if which not in BALL_KINDS:
        raise DomainError(f"sample_ball: неизвестный тип шара '{which}', ожидается один из {BALL_KINDS}")
    if center.dim != 3:
        raise DomainError(f"sample_ball: сетка строится только для d = 3, получено d={center.dim}")
    temp = center.temp if temp is None else as_temperature(temp)
    if temp.t != center.temp.t:
        center = CoSimplexPoint.from_probability(center.codensity(), temp)

    if radius <= 0:
        return _frame(center.codensity()[None, :], np.zeros(1))

    resolution = grid_resolution or settings.grid_resolution
    grid = simplex_grid(resolution)
    logger.info(f"🔄 Шар {which}: t={temp.t}, радиус {radius}, узлов {len(grid)}")

    if which == 't-HG':
        distances = _t_hilbert_rows(grid, center.codensity(), temp)
    elif which == 't-NH':
        base = constrained_link(center).theta_check
        distances = np.array([
            t_nh_norm(t_sub(constrained_link(CoSimplexPoint.from_probability(row, temp)).theta_check, base, temp), temp)
            for row in grid
        ])
    else:
        from ..approximation import SmoothingConfig, diff_hilbert
        cfg = SmoothingConfig(T=smoothing_T or settings.smoothing_T)
        distances = np.array([
            diff_hilbert(CoSimplexPoint.from_probability(row, temp), center, cfg)
            for row in grid
        ])

    inside = distances <= radius
    logger.info(f"✅ В шар попало {int(np.sum(inside))} узлов")
    return _frame(grid[inside], distances[inside])


def sample_bisector(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint,
                    grid_resolution: Optional[int] = None) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """
    Бисектриса Вороного и область t-равенства треугольника на сетке

    Принадлежность проверяется в единицах классического расстояния
    (обратная связь log exp_t), допуск - 1.5 диаметра ячейки. Поэтому
    множества узлов не зависят от t.

    Args:
        p_tilde: Первая точка (d = 3)
        q_tilde: Вторая точка (d = 3, та же температура)
        grid_resolution: Разрешение сетки

    Returns:
        (бисектриса, область равенства) - два DataFrame x, y, value
    """
    if p_tilde.dim != 3 or q_tilde.dim != 3:
        raise DomainError("sample_bisector: сетка строится только для d = 3")
    if np.allclose(p_tilde.values, q_tilde.values):
        raise DomainError("sample_bisector: точки p и q совпадают")
    temp = p_tilde.temp

    resolution = grid_resolution or settings.grid_resolution
    grid = simplex_grid(resolution)
    logger.info(f"🔄 Бисектриса: t={temp.t}, узлов {len(grid)}")

    to_p = _t_hilbert_rows(grid, p_tilde.codensity(), temp)
    to_q = _t_hilbert_rows(grid, q_tilde.codensity(), temp)
    between = float(log_t_exp(temp.t_star * _classic_hilbert_rows(
        p_tilde.codensity()[None, :], q_tilde.codensity())[0], temp))

    tolerance = CELL_TOLERANCE_FACTOR * temp.t_star * cell_diameter(grid, resolution)

    gap = np.abs(classic_scale(to_p, temp) - classic_scale(to_q, temp))
    on_bisector = gap < tolerance

    through = np.asarray(t_add(to_p, to_q, temp))
    excess = classic_scale(through, temp) - classic_scale(between, temp)
    on_equality = np.abs(excess) < tolerance

    logger.info(f"✅ Бисектриса: {int(np.sum(on_bisector))} узлов, область равенства: {int(np.sum(on_equality))}")
    return (
        _frame(grid[on_bisector], np.abs(to_p - to_q)[on_bisector]),
        _frame(grid[on_equality], excess[on_equality]),
    )
