"""
Деформированные логарифм, экспонента и t-алгебра (сложение и вычитание)

Все функции векторизованы: скаляр на входе дает float, массив - массив.
"""

from functools import reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from ..errors import DomainError
from .temperature import TemperatureLike, as_temperature


def _restore(result: np.ndarray, like):
    """Вернуть float для скалярного входа"""
    if np.ndim(like) == 0:
        return float(result)
    return result


def log_t(x, temp: TemperatureLike):
    """
    Темперированный логарифм (x^{1-t} - 1) / (1 - t), при t = 1 - ln x

    Args:
        x: Положительное число или массив (допускается +inf)
        temp: Температура

    Returns:
        log_t(x)
    """
    temp = as_temperature(temp)
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"log_t определен только для x > 0, получено x={x}, t={temp.t}")

    with np.errstate(over='ignore', invalid='ignore'):
        if temp.is_classic:
            out = np.log(arr)
        else:
            k = temp.one_minus_t
            out = np.expm1(k * np.log(arr)) / k
    return _restore(out, x)


def exp_t(y, temp: TemperatureLike):
    """
    Темперированная экспонента [1 + (1 - t) y]_+^{1/(1-t)}, при t = 1 - exp y

    При 1 + (1 - t) y <= 0 значение отсекается: 0 для t < 1,
    +inf для t > 1 (аргумент за полюсом).

    Args:
        y: Число или массив
        temp: Температура

    Returns:
        exp_t(y)
    """
    temp = as_temperature(temp)
    arr = np.asarray(y, dtype=float)

    with np.errstate(over='ignore', invalid='ignore', divide='ignore'):
        if temp.is_classic:
            out = np.exp(arr)
        else:
            k = temp.one_minus_t
            base = 1.0 + k * arr
            inside = base > 0
            safe = np.where(inside, k * arr, 0.0)
            out = np.where(inside, np.exp(np.log1p(safe) / k), 0.0 if k > 0 else np.inf)
    return _restore(out, y)


def is_clipped(y, temp: TemperatureLike):
    """Отсекается ли аргумент экспоненты: 1 + (1 - t) y <= 0"""
    temp = as_temperature(temp)
    arr = np.asarray(y, dtype=float)
    if temp.is_classic:
        out = np.zeros(arr.shape, dtype=bool)
    else:
        out = ~(1.0 + temp.one_minus_t * arr > 0)
    if np.ndim(y) == 0:
        return bool(out)
    return out


def _require_unclipped(values, temp, operation: str, name: str):
    if np.any(is_clipped(values, temp)):
        raise DomainError(
            f"{operation}: операнд {name}={values} отсекается exp_t при t={temp.t}"
        )


def t_add(a, b, temp: TemperatureLike):
    """
    t-сложение a ⊕_t b = a + b + (1 - t) a b = log_t(exp_t a · exp_t b)

    Raises:
        DomainError: если один из операндов отсекается exp_t
    """
    temp = as_temperature(temp)
    a_arr = np.asarray(a, dtype=float)
    b_arr = np.asarray(b, dtype=float)
    _require_unclipped(a_arr, temp, 't_add', 'a')
    _require_unclipped(b_arr, temp, 't_add', 'b')
    out = a_arr + b_arr + temp.one_minus_t * a_arr * b_arr
    return _restore(out, out)


def t_sub(a, b, temp: TemperatureLike):
    """
    t-вычитание a ⊖_t b = (a - b) / (1 + (1 - t) b) = log_t(exp_t a / exp_t b)

    Raises:
        DomainError: если exp_t b = 0 (или за полюсом)
    """
    temp = as_temperature(temp)
    a_arr = np.asarray(a, dtype=float)
    b_arr = np.asarray(b, dtype=float)
    _require_unclipped(b_arr, temp, 't_sub', 'b')
    out = (a_arr - b_arr) / (1.0 + temp.one_minus_t * b_arr)
    return _restore(out, out)


def t_neg(x, temp: TemperatureLike):
    """t-отрицание ⊖_t x = 0 ⊖_t x"""
    return t_sub(0.0, x, temp)


def t_sum(values, temp: TemperatureLike, axis: Optional[int] = None):
    """
    ⊕_t-свертка набора значений

    Считается через произведение скобок: prod(1 + (1 - t) v_i) в лог-области,
    поэтому результат не зависит от порядка слагаемых.

    Args:
        values: Массив слагаемых
        temp: Температура
        axis: Ось свертки (None - все элементы)

    Returns:
        (⊕_t)_i values_i
    """
    temp = as_temperature(temp)
    arr = np.asarray(values, dtype=float)
    if temp.is_classic:
        return _restore(np.sum(arr, axis=axis), np.sum(arr, axis=axis))

    _require_unclipped(arr, temp, 't_sum', 'values')
    k = temp.one_minus_t
    log_bracket = np.sum(np.log1p(k * arr), axis=axis)
    out = np.expm1(log_bracket) / k
    return _restore(out, out)


def t_fold(values: Iterable[float], temp: TemperatureLike, order: Optional[Sequence[int]] = None) -> float:
    """
    Последовательная левая свертка t_add в заданном порядке

    Args:
        values: Слагаемые
        temp: Температура
        order: Перестановка индексов (None - исходный порядок)

    Returns:
        Сумма ⊕_t
    """
    items = list(values)
    if order is not None:
        items = [items[i] for i in order]
    return float(reduce(lambda acc, v: t_add(acc, v, temp), items, 0.0))


def log_t_exp(u, temp: TemperatureLike):
    """
    Монотонная связь h_t(u) = log_t(exp u) = (e^{(1-t)u} - 1) / (1 - t)

    Переводит классическое расстояние Гильберта в t-расстояние.
    """
    temp = as_temperature(temp)
    arr = np.asarray(u, dtype=float)
    if temp.is_classic:
        out = arr.copy()
    else:
        k = temp.one_minus_t
        with np.errstate(over='ignore'):
            out = np.expm1(k * arr) / k
    return _restore(out, u)


def log_t_exp_derivative(u, temp: TemperatureLike):
    """Производная h_t'(u) = exp((1 - t) u)"""
    temp = as_temperature(temp)
    arr = np.asarray(u, dtype=float)
    with np.errstate(over='ignore'):
        out = np.exp(temp.one_minus_t * arr)
    return _restore(out, u)
