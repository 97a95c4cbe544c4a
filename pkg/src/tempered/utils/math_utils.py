"""
Математические утилиты: конечные разности, относительные ошибки, статистики
"""

from typing import Callable, List, Sequence

import numpy as np


class MathUtils:
    """Утилиты для численных проверок"""

    # Относительный шаг центральных разностей
    FD_STEP = 1e-5

    @staticmethod
    def step_for(x: float, base: float = FD_STEP) -> float:
        """
        Шаг конечной разности h = base * max(1, |x|)

        Args:
            x: Точка дифференцирования
            base: Базовый шаг

        Returns:
            Шаг h
        """
        return base * max(1.0, abs(float(x)))

    @staticmethod
    def central_difference(f: Callable[[float], float], x: float, h: float = None) -> float:
        """
        Центральная разность (f(x+h) - f(x-h)) / 2h

        Args:
            f: Скалярная функция
            x: Точка
            h: Шаг (по умолчанию step_for(x))

        Returns:
            Оценка производной
        """
        if h is None:
            h = MathUtils.step_for(x)
        return (f(x + h) - f(x - h)) / (2.0 * h)

    @staticmethod
    def numeric_gradient(f: Callable[[np.ndarray], float], x: Sequence[float], h: float = None) -> np.ndarray:
        """
        Градиент скалярной функции векторного аргумента центральными разностями

        Args:
            f: Функция R^d -> R
            x: Точка
            h: Шаг (по умолчанию покомпонентный step_for)

        Returns:
            Вектор градиента
        """
        point = np.asarray(x, dtype=float)
        grad = np.zeros_like(point)
        for i in range(point.size):
            step = MathUtils.step_for(point.flat[i]) if h is None else h
            forward = point.copy()
            backward = point.copy()
            forward.flat[i] += step
            backward.flat[i] -= step
            grad.flat[i] = (f(forward) - f(backward)) / (2.0 * step)
        return grad

    @staticmethod
    def relative_error(estimate, reference, floor: float = 1.0) -> float:
        """
        Относительная ошибка ||a - b|| / max(floor, ||b||)

        Args:
            estimate: Оценка
            reference: Эталон
            floor: Нижняя граница знаменателя

        Returns:
            Относительная ошибка
        """
        a = np.asarray(estimate, dtype=float)
        b = np.asarray(reference, dtype=float)
        return float(np.linalg.norm(a - b) / max(floor, float(np.linalg.norm(b))))

    @staticmethod
    def calculate_average(values: List[float]) -> float:
        """Среднее значение (0 для пустого списка)"""
        if len(values) == 0:
            return 0.0
        return float(np.mean(values))

    @staticmethod
    def calculate_standard_deviation(values: List[float]) -> float:
        """Выборочное стандартное отклонение (0 при менее чем двух значениях)"""
        if len(values) < 2:
            return 0.0
        return float(np.std(values, ddof=1))

    @staticmethod
    def observed_order(errors: Sequence[float], sizes: Sequence[float]) -> float:
        """
        Наблюдаемый порядок сходимости по наклону log(error) от log(n)

        Args:
            errors: Ошибки для разных размеров
            sizes: Размеры сетки

        Returns:
            Порядок p в error ~ C / n^p
        """
        log_n = np.log(np.asarray(sizes, dtype=float))
        log_e = np.log(np.asarray(errors, dtype=float))
        slope = np.polyfit(log_n, log_e, 1)[0]
        return float(-slope)

