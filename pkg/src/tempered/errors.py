"""
Исключения библиотеки темперированной геометрии
"""


class TemperedError(Exception):
    """Базовое исключение для всех ошибок библиотеки"""


class TemperatureError(TemperedError, ValueError):
    """Недопустимая температура (t >= 2 или не число)"""


class DomainError(TemperedError, ValueError):
    """Аргумент вне области определения операции"""


class ChartError(DomainError):
    """Координаты вне допустимой карты геометрии вложения"""


class ConvergenceError(TemperedError, RuntimeError):
    """Численный метод не сошелся за отведенный бюджет"""


class DivergenceError(TemperedError, RuntimeError):
    """Функция потерь оптимизации стала неконечной"""


class NumericError(TemperedError, ArithmeticError):
    """Результат нарушает математическое свойство сверх допуска округления"""
