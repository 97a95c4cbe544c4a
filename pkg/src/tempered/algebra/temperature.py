"""
Температура деформированной алгебры
"""

import math
from dataclasses import dataclass, field
from typing import Union

from ..errors import TemperatureError

# Порог переключения на классические log/exp
CLASSIC_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Temperature:
    """
    Параметр деформации t < 2 и сопряженный показатель t* = 1/(2 - t)

    Attributes:
        t: Температура
        t_star: Показатель ко-плотности (вычисляется при создании)
    """

    t: float
    t_star: float = field(init=False, repr=False)

    def __post_init__(self):
        t = float(self.t)
        if not math.isfinite(t):
            raise TemperatureError(f"Температура должна быть конечной, получено t={self.t}")
        if t >= 2.0:
            raise TemperatureError(f"Требуется t < 2, получено t={t}")
        object.__setattr__(self, 't', t)
        object.__setattr__(self, 't_star', 1.0 / (2.0 - t))

    @property
    def one_minus_t(self) -> float:
        """Коэффициент деформации 1 - t"""
        return 1.0 - self.t

    @property
    def is_classic(self) -> bool:
        """Совпадает ли температура с t = 1 в пределах порога"""
        return abs(self.t - 1.0) < CLASSIC_TOLERANCE

    def shifted(self, offset: float) -> 'Temperature':
        """Температура t + offset (например, t - 1 для log_{t-1})"""
        return Temperature(self.t + offset)

    def __float__(self) -> float:
        return self.t


TemperatureLike = Union[Temperature, float, int]


def as_temperature(temp: TemperatureLike) -> Temperature:
    """
    Привести число или Temperature к Temperature

    Args:
        temp: Температура или число

    Returns:
        Экземпляр Temperature
    """
    if isinstance(temp, Temperature):
        return temp
    return Temperature(float(temp))


def scaled_temperature(temp: TemperatureLike, alpha: float) -> Temperature:
    """
    Температура t_alpha = 1 - (1 - t) * alpha

    Используется в свойстве однородности t-вариации: ||alpha u||_t = alpha ||u||_{t_alpha}
    """
    temp = as_temperature(temp)
    if alpha <= 0:
        raise TemperatureError(f"Масштаб должен быть положительным, получено alpha={alpha}")
    return Temperature(1.0 - temp.one_minus_t * alpha)
