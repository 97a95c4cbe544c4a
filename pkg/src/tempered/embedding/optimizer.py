"""
Оптимизация вложения: функция потерь и Adam
"""

import logging
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..config import settings
from ..errors import ChartError, DivergenceError, DomainError
from .datasets import DistanceDataset
from .geometries import (
    GeometryKind, initial_chart, pairwise_distances, retract, smoothed_distances_and_jacobian
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbedConfig:
    """
    Параметры оптимизации вложения

    Attributes:
        dim: Размерность карты
        lr: Шаг Adam
        iterations: Число итераций
        T: Сглаживание расстояний семейства Гильберта
        seed: Зерно инициализации
        init_scale: Стандартное отклонение начальной карты
        normalize: Делить D на среднее внедиагональное значение
        beta1: Коэффициент первого момента
        beta2: Коэффициент второго момента
        eps: Стабилизатор знаменателя
    """

    dim: int = 3
    lr: float = 0.05
    iterations: int = 500
    T: float = field(default_factory=lambda: settings.smoothing_T)
    seed: int = 0
    init_scale: float = 0.1
    normalize: bool = False
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError(f"EmbedConfig: dim должно быть положительным, получено {self.dim}")
        if self.iterations < 0:
            raise DomainError(f"EmbedConfig: iterations не может быть отрицательным")
        if not self.lr > 0 or not self.T > 0:
            raise DomainError(f"EmbedConfig: lr и T должны быть положительными")

    def as_dict(self) -> Dict[str, Any]:
        return asdict(self)


class AdamOptimizer:
    """Адаптивные моменты с коррекцией смещения"""

    def __init__(self, lr: float, beta1: float = 0.9, beta2: float = 0.999, eps: float = 1e-8):
        self.lr = lr
        self.beta1 = beta1
        self.beta2 = beta2
        self.eps = eps
        self.step_count = 0
        self.m: Optional[np.ndarray] = None
        self.v: Optional[np.ndarray] = None

    def step(self, params: np.ndarray, grad: np.ndarray) -> np.ndarray:
        """
        Один шаг Adam

        Args:
            params: Текущие параметры
            grad: Градиент функции потерь

        Returns:
            Новые параметры
        """
        if self.m is None:
            self.m = np.zeros_like(params)
            self.v = np.zeros_like(params)
        self.step_count += 1
        self.m = self.beta1 * self.m + (1.0 - self.beta1) * grad
        self.v = self.beta2 * self.v + (1.0 - self.beta2) * grad ** 2
        m_hat = self.m / (1.0 - self.beta1 ** self.step_count)
        v_hat = self.v / (1.0 - self.beta2 ** self.step_count)
        return params - self.lr * m_hat / (np.sqrt(v_hat) + self.eps)


@dataclass
class EmbeddingRun:
    """Результат оптимизации вложения"""

    Y: np.ndarray
    loss_history: List[float]
    config: EmbedConfig
    kind: GeometryKind
    initial_loss: float
    final_loss: float
    scale: float = 1.0


def _offdiagonal_mask(n: int) -> np.ndarray:
    return ~np.eye(n, dtype=bool)


def embedding_loss(D, Y, kind: GeometryKind) -> float:
    """
    Функция потерь (1/n²) Σ_{i,j} (D_ij - ρ(y_i, y_j))² на точных расстояниях

    Args:
        D: DistanceDataset или матрица n×n
        Y: Карта n×dim
        kind: Геометрия

    Returns:
        Значение функции потерь
    """
    D = D.D if isinstance(D, DistanceDataset) else np.asarray(D, dtype=float)
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    if D.shape != (len(Y), len(Y)):
        raise DomainError(f"embedding_loss: матрица {D.shape} не согласована с {len(Y)} точками")
    residual = D - pairwise_distances(kind, Y)
    return float(np.sum(residual ** 2) / len(Y) ** 2)


def smoothed_loss_and_gradient(D, Y, kind: GeometryKind, T: float) -> Tuple[float, np.ndarray]:
    """
    Функция потерь на сглаженных расстояниях и ее аналитический градиент

    Диагональ исключается: сглаженное расстояние точки до себя не равно нулю.

    Args:
        D: Матрица n×n
        Y: Карта n×dim
        kind: Геометрия
        T: Сглаживание

    Returns:
        (loss, grad n×dim)
    """
    D = D.D if isinstance(D, DistanceDataset) else np.asarray(D, dtype=float)
    Y = np.atleast_2d(np.asarray(Y, dtype=float))
    n = len(Y)
    rho, jac = smoothed_distances_and_jacobian(kind, Y, T)
    residual = np.where(_offdiagonal_mask(n), D - rho, 0.0)
    loss = float(np.sum(residual ** 2) / n ** 2)
    grad = -4.0 / n ** 2 * np.einsum('ij,ijk->ik', residual, jac)
    return loss, grad


def optimize_embedding(D, kind: GeometryKind, dim: Optional[int] = None,
                       config: Optional[EmbedConfig] = None, Y0: Optional[np.ndarray] = None) -> EmbeddingRun:
    """
    Вложение матрицы расстояний в геометрию градиентным спуском Adam

    Args:
        D: DistanceDataset или матрица n×n
        kind: Геометрия
        dim: Размерность карты (по умолчанию config.dim)
        config: Параметры оптимизации
        Y0: Начальная карта (по умолчанию случайная из config.seed)

    Returns:
        EmbeddingRun; final_loss считается на точных расстояниях
    """
    config = config or EmbedConfig()
    dim = dim or config.dim
    matrix = D.D if isinstance(D, DistanceDataset) else np.asarray(D, dtype=float)
    n = len(matrix)

    scale = 1.0
    if config.normalize and n > 1:
        scale = float(np.sum(matrix) / (n * (n - 1))) or 1.0
        matrix = matrix / scale

    if Y0 is None:
        rng = np.random.default_rng(config.seed)
        Y = initial_chart(kind, n, dim, rng, config.init_scale)
    else:
        Y = np.array(Y0, dtype=float)
        if Y.shape != (n, dim):
            raise ChartError(f"optimize_embedding: начальная карта {Y.shape}, ожидается {(n, dim)}")
    Y = retract(kind, Y)

    initial_loss = embedding_loss(matrix, Y, kind)
    logger.info(f"🔄 Вложение {kind.label} (t={kind.t}), dim={dim}, n={n}: начальная потеря {initial_loss:.6g}")

    optimizer = AdamOptimizer(config.lr, config.beta1, config.beta2, config.eps)
    history: List[float] = []
    for iteration in range(config.iterations):
        loss, grad = smoothed_loss_and_gradient(matrix, Y, kind, config.T)
        if not np.isfinite(loss) or not np.all(np.isfinite(grad)):
            logger.error(f"❌ Расходимость на итерации {iteration}: потеря {loss}")
            raise DivergenceError(
                f"optimize_embedding: нечисловая потеря {loss} на итерации {iteration} "
                f"(геометрия {kind.label}, dim={dim}, lr={config.lr})"
            )
        history.append(loss)
        Y = retract(kind, optimizer.step(Y, grad))

    final_loss = embedding_loss(matrix, Y, kind)
    logger.info(f"✅ Вложение {kind.label}: итоговая потеря {final_loss:.6g}")
    return EmbeddingRun(Y, history, config, kind, initial_loss, final_loss, scale)
