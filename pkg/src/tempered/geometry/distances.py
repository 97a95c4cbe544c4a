"""
Темперированные расстояния Функа и Гильберта, t-вариация и t-NH норма

Расстояния на ко-симплексе вычисляются через логарифмы отношений
компонент, экспонента берется только в конце (log_t exp).
"""

from typing import List, Sequence, Tuple

import numpy as np

from ..algebra import (
    TemperatureLike, as_temperature, log_t, log_t_exp, exp_t, is_clipped,
    t_add, t_sub
)
from ..errors import DomainError
from ..parameterization import (
    CoSimplexPoint, check_compatible, constrained_link, unconstrained_link
)
from .domains import AT_INFINITY, ConvexDomain, ray_boundary

# Неотрицательное значение t-вариации
TVarValue = float


def _norm(v: np.ndarray, norm: float) -> float:
    return float(np.linalg.norm(v, ord=norm))


def _funk_ratio(domain: ConvexDomain, r, s, norm: float = 2) -> float:
    """Отношение ||r - s̄|| / ||s - s̄|| (1 для совпадающих точек и точки на бесконечности)"""
    r = domain.require_inside(r, 'funk')
    s = domain.require_inside(s, 'funk')
    if np.array_equal(r, s):
        return 1.0
    boundary = ray_boundary(domain, r, s)
    if boundary is AT_INFINITY:
        return 1.0
    return _norm(r - boundary, norm) / _norm(s - boundary, norm)


def t_funk_domain(domain: ConvexDomain, r, s, temp: TemperatureLike, norm: float = 2) -> float:
    """
    t-расстояние Функа log_t(||r - s̄|| / ||s - s̄||)

    Args:
        domain: Выпуклая область
        r: Первая точка
        s: Вторая точка
        temp: Температура
        norm: Порядок нормы (2 по умолчанию)

    Returns:
        Неотрицательное расстояние (0 при r = s и при s̄ на бесконечности)
    """
    temp = as_temperature(temp)
    return float(log_t(_funk_ratio(domain, r, s, norm), temp))


def t_hilbert_domain(domain: ConvexDomain, r, s, temp: TemperatureLike, norm: float = 2) -> float:
    """
    t-расстояние Гильберта: t-симметризация ρ_f(r, s) ⊕_t ρ_f(s, r)
    """
    temp = as_temperature(temp)
    forward = t_funk_domain(domain, r, s, temp, norm)
    backward = t_funk_domain(domain, s, r, temp, norm)
    return float(t_add(forward, backward, temp))


def cross_ratio_hilbert(domain: ConvexDomain, r, s, chi: float = 1.0, norm: float = 2) -> float:
    """
    Классическое расстояние Гильберта χ·log двойного отношения

    Args:
        domain: Выпуклая область
        r: Первая точка
        s: Вторая точка
        chi: Масштаб χ (1/2 дает модель Кляйна в единичном шаре)
        norm: Порядок нормы

    Returns:
        Расстояние Гильберта
    """
    forward = _funk_ratio(domain, r, s, norm)
    backward = _funk_ratio(domain, s, r, norm)
    return float(chi * (np.log(forward) + np.log(backward)))


def _log_ratios(p_values: np.ndarray, q_values: np.ndarray) -> np.ndarray:
    return np.log(p_values) - np.log(q_values)


def t_funk_cosimplex(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """
    t-Функ на ко-симплексе log_t max_i(p̃_i / q̃_i)

    Args:
        p_tilde: Первая точка
        q_tilde: Вторая точка

    Returns:
        Расстояние (может быть асимметричным)
    """
    check_compatible(p_tilde, q_tilde, 't_funk_cosimplex')
    top = float(np.max(_log_ratios(p_tilde.values, q_tilde.values)))
    return float(log_t_exp(max(top, 0.0), p_tilde.temp))


def t_hilbert_cosimplex(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """
    t-Гильберт на ко-симплексе log_t(max_i(p̃_i/q̃_i) / min_i(p̃_i/q̃_i))
    """
    check_compatible(p_tilde, q_tilde, 't_hilbert_cosimplex')
    return t_hilbert_raw(p_tilde.values, q_tilde.values, p_tilde.temp)


def t_hilbert_raw(p, q, temp: TemperatureLike) -> float:
    """
    t-Гильберт на положительных векторах конуса (проективный вариант)

    Args:
        p: Положительный вектор
        q: Положительный вектор той же длины
        temp: Температура

    Returns:
        log_t(max ratio / min ratio); 0 для p = K q
    """
    temp = as_temperature(temp)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise DomainError(f"t_hilbert_raw: разные размерности {p.shape} и {q.shape}")
    if np.any(~(p > 0)) or np.any(~(q > 0)):
        raise DomainError(f"t_hilbert_raw: векторы должны быть положительны: p={p}, q={q}")
    logs = _log_ratios(p, q)
    return float(log_t_exp(float(np.max(logs) - np.min(logs)), temp))


def t_hilbert_cosimplex_batch(points: np.ndarray, center: np.ndarray, temp: TemperatureLike) -> np.ndarray:
    """
    t-Гильберт от центра до набора точек (строки points - значения p̃)

    Args:
        points: Матрица m×d положительных векторов
        center: Вектор d
        temp: Температура

    Returns:
        Вектор m расстояний
    """
    logs = np.log(points) - np.log(center)[None, :]
    spread = np.max(logs, axis=1) - np.min(logs, axis=1)
    return np.asarray(log_t_exp(spread, temp))


def _deformed_log_any(y: float, q: float) -> float:
    """log_q для произвольного q (включая q >= 2), нужен маршруту через t*"""
    if abs(q - 1.0) < 1e-10:
        return float(np.log(y))
    return float(np.expm1((1.0 - q) * np.log(y)) / (1.0 - q))


def t_funk_via_domain(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """
    Маршрут через область: t* · ρ^Δ_{t*-FD}(p, q) для ко-плотностей p, q

    Граничная точка ищется пересечением луча с симплексом.
    """
    check_compatible(p_tilde, q_tilde, 't_funk_via_domain')
    t_star = p_tilde.temp.t_star
    domain = ConvexDomain.simplex(p_tilde.dim)
    ratio = _funk_ratio(domain, p_tilde.codensity(), q_tilde.codensity())
    return t_star * _deformed_log_any(ratio, t_star)


def t_hilbert_via_domain(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """Маршрут через область для t-Гильберта: t* · log_{t*} exp ρ^Δ_{1-HG}(p, q)"""
    check_compatible(p_tilde, q_tilde, 't_hilbert_via_domain')
    t_star = p_tilde.temp.t_star
    domain = ConvexDomain.simplex(p_tilde.dim)
    p = p_tilde.codensity()
    q = q_tilde.codensity()
    if np.array_equal(p, q):
        return 0.0
    classic = cross_ratio_hilbert(domain, p, q)
    return t_star * _deformed_log_any(float(np.exp(classic)), t_star)


def t_var_norm(x: Sequence[float], temp: TemperatureLike) -> TVarValue:
    """
    t-вариация max_i x_i ⊖_t min_i x_i

    Args:
        x: Вектор
        temp: Температура

    Returns:
        Неотрицательное значение; 0 для постоянных векторов
    """
    temp = as_temperature(temp)
    x = np.asarray(x, dtype=float)
    low = float(np.min(x))
    if is_clipped(low, temp):
        raise DomainError(f"t_var_norm: минимум {low} отсекается exp_t при t={temp.t}")
    return max(float(t_sub(float(np.max(x)), low, temp)), 0.0)


def t_nh_norm(u: Sequence[float], temp: TemperatureLike, absolute: bool = False) -> float:
    """
    t-NH норма: max по упорядоченным парам i != j значения u_i ⊖_t u_j

    absolute=True берет |u_i ⊖_t u_j|; обе формы совпадают при t <= 1,
    при t > 1 изометрии с t-Гильбертом удовлетворяет знаковая форма.

    Args:
        u: Вектор
        temp: Температура
        absolute: Брать модуль разностей

    Returns:
        Неотрицательное значение нормы
    """
    temp = as_temperature(temp)
    u = np.asarray(u, dtype=float).reshape(-1)
    if u.size < 2:
        return 0.0
    if np.any(is_clipped(u, temp)):
        raise DomainError(f"t_nh_norm: компоненты {u} отсекаются exp_t при t={temp.t}")

    diffs = (u[:, None] - u[None, :]) / (1.0 + temp.one_minus_t * u[None, :])
    if absolute:
        diffs = np.abs(diffs)
    np.fill_diagonal(diffs, -np.inf)
    return max(float(np.max(diffs)), 0.0)


def isometry_unconstrained(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """ρ_{t-var}(log_t p̃, log_t q̃) = ||θ ⊖_t θ'||_{t-var}"""
    check_compatible(p_tilde, q_tilde, 'isometry_unconstrained')
    temp = p_tilde.temp
    theta = unconstrained_link(p_tilde).theta
    theta_other = unconstrained_link(q_tilde).theta
    return t_var_norm(t_sub(theta, theta_other, temp), temp)


def isometry_constrained(p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """ρ_{t-NH}(θ̌, θ̌') на ограниченных параметрах"""
    check_compatible(p_tilde, q_tilde, 'isometry_constrained')
    temp = p_tilde.temp
    theta = constrained_link(p_tilde).theta_check
    theta_other = constrained_link(q_tilde).theta_check
    return t_nh_norm(t_sub(theta, theta_other, temp), temp)


def validate_partition(partition: Sequence[Sequence[int]], d: int) -> List[List[int]]:
    """Проверить, что блоки непусты, не пересекаются и покрывают [d]"""
    blocks = [sorted(int(i) for i in block) for block in partition]
    flat = [i for block in blocks for i in block]
    if any(len(block) == 0 for block in blocks):
        raise DomainError(f"coarse_grain: пустой блок в разбиении {partition}")
    if sorted(flat) != list(range(d)):
        raise DomainError(f"coarse_grain: {partition} не является разбиением {{0..{d - 1}}}")
    return blocks


def coarse_grain(p_tilde: CoSimplexPoint, partition: Sequence[Sequence[int]]) -> CoSimplexPoint:
    """
    Огрубление: блок i равен (Σ_{j in X_i} p̃_j^{1/t*})^{t*}

    Args:
        p_tilde: Точка ко-симплекса
        partition: Разбиение индексов 0..d-1

    Returns:
        Точка ко-симплекса размерности len(partition)
    """
    blocks = validate_partition(partition, p_tilde.dim)
    density = p_tilde.codensity()
    merged = np.array([np.sum(density[block]) for block in blocks])
    return CoSimplexPoint(merged ** p_tilde.temp.t_star, p_tilde.temp)


def random_partition(rng: np.random.Generator, d: int) -> List[List[int]]:
    """Случайное разбиение [d] на от 1 до d блоков"""
    k = int(rng.integers(1, d + 1))
    labels = rng.permutation(np.concatenate([np.arange(k), rng.integers(0, k, size=d - k)]))
    return [list(np.flatnonzero(labels == b)) for b in range(k)]


def check_contraction(A, p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> Tuple[float, float]:
    """
    t-Гильберт пары до и после положительного линейного отображения A

    A применяется к векторам p̃, q̃ без перенормировки (проективность).

    Args:
        A: Матрица с положительными элементами
        p_tilde: Первая точка
        q_tilde: Вторая точка

    Returns:
        (before, after), after <= before
    """
    check_compatible(p_tilde, q_tilde, 'check_contraction')
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[1] != p_tilde.dim:
        raise DomainError(f"check_contraction: матрица формы {A.shape} не подходит для d={p_tilde.dim}")
    if np.any(~(A > 0)):
        raise DomainError("check_contraction: матрица должна быть поэлементно положительной")

    temp = p_tilde.temp
    before = t_hilbert_raw(p_tilde.values, q_tilde.values, temp)
    after = t_hilbert_raw(A @ p_tilde.values, A @ q_tilde.values, temp)
    return before, after


def contraction_ratio(A, p_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint) -> float:
    """Коэффициент сжатия after / before (1 для совпадающих точек)"""
    before, after = check_contraction(A, p_tilde, q_tilde)
    if before == 0:
        return 1.0
    return after / before


def t_triangle_equality(p_tilde: CoSimplexPoint, x_tilde: CoSimplexPoint, q_tilde: CoSimplexPoint,
                        tol: float = 1e-9) -> bool:
    """
    Лежит ли x в области t-равенства треугольника ρ(p, x) ⊕_t ρ(x, q) = ρ(p, q)
    """
    temp = p_tilde.temp
    lhs = t_add(t_hilbert_cosimplex(p_tilde, x_tilde), t_hilbert_cosimplex(x_tilde, q_tilde), temp)
    return abs(lhs - t_hilbert_cosimplex(p_tilde, q_tilde)) <= tol


def classic_scale(u, temp: TemperatureLike):
    """Обратная связь log(exp_t u): t-расстояние в единицах классического"""
    return np.log(exp_t(u, temp))
