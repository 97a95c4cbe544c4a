"""
Гистограмма нормированной относительной ошибки дифференцируемого t-Гильберта
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

from ..algebra import TemperatureLike, as_temperature
from ..config import settings
from ..errors import DomainError
from ..geometry import t_hilbert_cosimplex
from ..parameterization import random_cosimplex
from ..utils import MathUtils
from .distances import SmoothingConfig, diff_hilbert

logger = logging.getLogger(__name__)

ERROR_RANGE = (-1.0, 1.0)


@dataclass
class HistogramRecord:
    """Результат эксперимента с относительной ошибкой"""

    t: float
    T: float
    delta: float
    d: int
    bins: List[float]
    counts: List[int]
    mean: float
    sd: float
    errors: np.ndarray = field(default_factory=lambda: np.zeros(0), repr=False)

    @property
    def total(self) -> int:
        return int(sum(self.counts))

    def negative_share(self) -> float:
        """Доля отрицательных ошибок (недооценка)"""
        if self.errors.size == 0:
            return 0.0
        return float(np.mean(self.errors < 0))

    def positive_share(self) -> float:
        """Доля положительных ошибок (переоценка)"""
        if self.errors.size == 0:
            return 0.0
        return float(np.mean(self.errors > 0))

    def to_dict(self) -> Dict[str, Any]:
        return {
            't': self.t,
            'T': self.T,
            'delta': self.delta,
            'd': self.d,
            'bins': list(self.bins),
            'counts': list(self.counts),
            'mean': self.mean,
            'sd': self.sd,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_frame(self) -> pd.DataFrame:
        """Таблица по корзинам: t, T, delta, d, bin, count, mean, sd"""
        return pd.DataFrame({
            't': self.t, 'T': self.T, 'delta': self.delta, 'd': self.d,
            'bin': self.bins, 'count': self.counts, 'mean': self.mean, 'sd': self.sd,
        })


def _worker_errors(seed_sequence: np.random.SeedSequence, n_pairs: int, d: int, t: float,
                   cfg: SmoothingConfig) -> np.ndarray:
    """Относительные ошибки для порции пар с собственным генератором"""
    rng = np.random.default_rng(seed_sequence)
    errors = np.empty(n_pairs)
    for i in range(n_pairs):
        p_tilde, q_tilde = random_cosimplex(rng, d, t, n=2)
        exact = t_hilbert_cosimplex(p_tilde, q_tilde)
        smooth = diff_hilbert(p_tilde, q_tilde, cfg)
        errors[i] = (smooth - exact) / exact
    return errors


def _split(n_pairs: int, workers: int) -> List[int]:
    base, extra = divmod(n_pairs, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def relative_error_histogram(n_pairs: int, d: int, temp: TemperatureLike, cfg: SmoothingConfig,
                             seed: int = 0, bins: Optional[int] = None,
                             workers: Optional[int] = None) -> HistogramRecord:
    """
    Гистограмма (ρ_{t-dHG} - ρ_{t-HG}) / ρ_{t-HG} на случайных парах ко-симплекса

    Ко-плотности берутся из плоского распределения Дирихле. Пары делятся
    между воркерами, генератор воркера порождается SeedSequence(seed).spawn.

    Args:
        n_pairs: Число пар (>= 1)
        d: Размерность
        temp: Температура
        cfg: Параметры сглаживания
        seed: Зерно
        bins: Число корзин на [-1, 1] (по умолчанию из настроек)
        workers: Число процессов (по умолчанию из настроек)

    Returns:
        HistogramRecord; выбросы попадают в крайние корзины
    """
    if n_pairs < 1:
        raise DomainError(f"relative_error_histogram: n_pairs должно быть >= 1, получено {n_pairs}")
    temp = as_temperature(temp)
    bins = bins or settings.histogram_bins
    workers = max(1, min(workers or settings.workers, n_pairs))

    logger.info(f"🔄 Гистограмма ошибки: t={temp.t}, T={cfg.T}, δ={cfg.delta}, d={d}, пар {n_pairs}")
    children = np.random.SeedSequence(seed).spawn(workers)
    sizes = _split(n_pairs, workers)

    if workers == 1:
        chunks = [_worker_errors(children[0], sizes[0], d, temp.t, cfg)]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_worker_errors, children, sizes, [d] * workers,
                                   [temp.t] * workers, [cfg] * workers))
    errors = np.concatenate(chunks)

    edges = np.linspace(ERROR_RANGE[0], ERROR_RANGE[1], bins + 1)
    counts, _ = np.histogram(np.clip(errors, *ERROR_RANGE), bins=edges)
    centers = 0.5 * (edges[:-1] + edges[1:])

    record = HistogramRecord(
        t=temp.t,
        T=float(cfg.T),
        delta=float(cfg.delta),
        d=int(d),
        bins=[float(c) for c in centers],
        counts=[int(c) for c in counts],
        mean=MathUtils.calculate_average(errors),
        sd=MathUtils.calculate_standard_deviation(errors),
        errors=errors,
    )
    logger.info(f"✅ Среднее {record.mean:.4f}, отклонение {record.sd:.4f}, доля < 0: {record.negative_share():.3f}")
    return record
