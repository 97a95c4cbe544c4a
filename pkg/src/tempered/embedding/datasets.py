"""
Наборы данных для сравнения геометрий: случайные точки и графы
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import shortest_path
from scipy.spatial.distance import pdist, squareform

from ..errors import DomainError

logger = logging.getLogger(__name__)

SOURCES = ('points', 'er', 'ba')

# Бюджет пересэмплирования несвязного графа
RESAMPLE_BUDGET = 32


@dataclass(frozen=True)
class DatasetSpec:
    """
    Описание источника данных

    Attributes:
        source: 'points', 'er' (Эрдёш-Реньи) или 'ba' (Барабаши-Альберт)
        n: Число точек/вершин
        ambient_dim: Размерность пространства для 'points'
        p: Вероятность ребра для 'er'
        m: Число ребер новой вершины для 'ba'
    """

    source: str = 'points'
    n: int = 50
    ambient_dim: int = 50
    p: float = 0.5
    m: int = 2

    def __post_init__(self):
        if self.source not in SOURCES:
            raise DomainError(f"Неизвестный источник данных '{self.source}', ожидается один из {SOURCES}")
        if self.n < 2:
            raise DomainError(f"Нужно хотя бы две точки, получено n={self.n}")

    def params(self) -> Dict[str, Any]:
        if self.source == 'points':
            return {'n': self.n, 'ambient_dim': self.ambient_dim}
        if self.source == 'er':
            return {'n': self.n, 'p': self.p}
        return {'n': self.n, 'm': self.m}


@dataclass
class DistanceDataset:
    """Симметричная матрица расстояний с нулевой диагональю"""

    n: int
    D: np.ndarray
    source: str
    seed: Optional[int] = None
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        D = np.asarray(self.D, dtype=float)
        if D.shape != (self.n, self.n):
            raise DomainError(f"DistanceDataset: ожидается матрица {self.n}×{self.n}, получено {D.shape}")
        if not np.all(np.isfinite(D)):
            raise DomainError("DistanceDataset: бесконечные расстояния (несвязный граф?)")
        if not np.allclose(D, D.T) or np.any(np.diag(D) != 0) or np.any(D < 0):
            raise DomainError("DistanceDataset: матрица должна быть симметричной, неотрицательной, с нулевой диагональю")
        self.D = D

    def mean_offdiagonal(self) -> float:
        if self.n < 2:
            return 0.0
        return float(np.sum(self.D) / (self.n * (self.n - 1)))


def from_points(X, source: str = 'points', seed: Optional[int] = None) -> DistanceDataset:
    """Попарные евклидовы расстояния строк X"""
    X = np.asarray(X, dtype=float)
    D = squareform(pdist(X)) if len(X) > 1 else np.zeros((len(X), len(X)))
    return DistanceDataset(len(X), D, source, seed, {'ambient_dim': int(X.shape[1])})


def from_graph(G: nx.Graph, source: str = 'graph', seed: Optional[int] = None) -> DistanceDataset:
    """
    Расстояния кратчайших путей (число ребер) в связном графе

    Args:
        G: Неориентированный граф
        source: Метка источника
        seed: Зерно генерации

    Returns:
        DistanceDataset
    """
    if G.number_of_nodes() < 2 or not nx.is_connected(G):
        raise DomainError(f"from_graph: граф на {G.number_of_nodes()} вершинах несвязен")
    adjacency = nx.to_scipy_sparse_array(G, nodelist=sorted(G.nodes()))
    D = shortest_path(adjacency, directed=False, unweighted=True)
    return DistanceDataset(G.number_of_nodes(), D, source, seed)


def generate_dataset(spec: DatasetSpec, seed: int = 0) -> DistanceDataset:
    """
    Сгенерировать набор данных

    points: попарные расстояния n стандартных нормальных точек;
    er/ba: расстояния по числу ребер, несвязный граф пересэмплируется
    до RESAMPLE_BUDGET раз.

    Args:
        spec: Описание источника
        seed: Зерно

    Returns:
        DistanceDataset
    """
    rng = np.random.default_rng(seed)

    if spec.source == 'points':
        dataset = from_points(rng.standard_normal((spec.n, spec.ambient_dim)), 'points', seed)
        dataset.params = spec.params()
        return dataset

    for attempt in range(RESAMPLE_BUDGET):
        graph_seed = int(rng.integers(0, 2 ** 31 - 1))
        if spec.source == 'er':
            G = nx.erdos_renyi_graph(spec.n, spec.p, seed=graph_seed)
        else:
            G = nx.barabasi_albert_graph(spec.n, spec.m, seed=graph_seed)
        if nx.is_connected(G):
            dataset = from_graph(G, spec.source, seed)
            dataset.params = spec.params()
            return dataset
        logger.info(f"⚠️ Граф {spec.source} несвязен, попытка {attempt + 1} из {RESAMPLE_BUDGET}")

    raise DomainError(
        f"generate_dataset: граф {spec.source} {spec.params()} несвязен после {RESAMPLE_BUDGET} попыток"
    )
