"""
Сравнение геометрий на одном наборе данных
"""

import logging
from dataclasses import replace
from typing import Iterable, List, Optional, Sequence

import pandas as pd

from ..errors import DivergenceError
from .datasets import DatasetSpec, DistanceDataset, generate_dataset
from .geometries import GeometryKind
from .optimizer import EmbedConfig, optimize_embedding

logger = logging.getLogger(__name__)

RESULT_COLUMNS = ['dataset', 'geometry', 't', 'dim', 'final_loss', 'iters', 'seed']

DEFAULT_KINDS = (
    GeometryKind('euclidean'),
    GeometryKind('hyperboloid'),
    GeometryKind('hilbert_simplex'),
    GeometryKind('t_hilbert', 0.5),
)


def compare_geometries(spec, dims: Sequence[int], kinds: Optional[Iterable[GeometryKind]] = None,
                       config: Optional[EmbedConfig] = None, seed: int = 0) -> pd.DataFrame:
    """
    Вложить один набор данных во все геометрии и размерности

    Все прогоны используют одинаковое зерно инициализации и число итераций.
    Расходящийся прогон записывается с final_loss = NaN.

    Args:
        spec: DatasetSpec или готовый DistanceDataset
        dims: Размерности карт
        kinds: Геометрии (по умолчанию DEFAULT_KINDS)
        config: Параметры оптимизации
        seed: Зерно набора данных и инициализации

    Returns:
        DataFrame со столбцами RESULT_COLUMNS
    """
    dataset = spec if isinstance(spec, DistanceDataset) else generate_dataset(spec, seed)
    kinds = list(kinds) if kinds is not None else list(DEFAULT_KINDS)
    config = replace(config or EmbedConfig(), seed=seed)

    logger.info(f"🔄 Сравнение {len(kinds)} геометрий на '{dataset.source}' (n={dataset.n}), размерности {list(dims)}")
    rows: List[dict] = []
    for kind in kinds:
        for dim in dims:
            try:
                run = optimize_embedding(dataset, kind, dim, replace(config, dim=dim))
                final_loss = run.final_loss
            except DivergenceError as e:
                logger.warning(f"⚠️ {kind.label}, dim={dim}: {e}")
                final_loss = float('nan')
            rows.append({
                'dataset': dataset.source,
                'geometry': kind.label,
                't': kind.t,
                'dim': int(dim),
                'final_loss': final_loss,
                'iters': config.iterations,
                'seed': seed,
            })

    result = pd.DataFrame(rows, columns=RESULT_COLUMNS)
    logger.info(f"✅ Сравнение завершено: {len(result)} прогонов")
    return result
