"""
Тест вложения матриц расстояний во все геометрии
"""

import sys
import os
import unittest

import numpy as np

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(os.path.dirname(__file__)), 'src'))

from tempered.embedding import (
    DatasetSpec, generate_dataset, GeometryKind, pairwise_distances, sample_in_geometry,
    EmbedConfig, optimize_embedding, compare_geometries, DEFAULT_KINDS
)

DESK_DATASETS = [
    DatasetSpec('points', n=50),
    DatasetSpec('er', n=50),
    DatasetSpec('ba', n=50),
]


class TestSelfConsistency(unittest.TestCase):
    """Данные, порожденные внутри геометрии, вкладываются обратно"""

    def setUp(self):
        self.rng = np.random.default_rng(51)

    def reembed(self, kind: GeometryKind, config: EmbedConfig, dim: int = 3, n: int = 12):
        truth = sample_in_geometry(kind, n, dim, self.rng)
        D = pairwise_distances(kind, truth)
        start = truth + 0.1 * self.rng.standard_normal(truth.shape)
        return optimize_embedding(D, kind, dim, config, Y0=start)

    def test_riemannian(self):
        """Тест евклидовой геометрии и гиперболоида"""
        print("🔁 Самосогласованность: евклидова геометрия и гиперболоид...")

        config = EmbedConfig(lr=0.001, iterations=4000)
        for kind in [GeometryKind('euclidean'), GeometryKind('hyperboloid')]:
            run = self.reembed(kind, config)
            self.assertLessEqual(run.final_loss, 1e-3 * run.initial_loss, kind.label)
            print(f"   ✅ {kind.label}: {run.initial_loss:.3e} -> {run.final_loss:.3e}")

    def test_hilbert_family(self):
        """Тест симплекса Гильберта и t-Гильберта"""
        print("🔁 Самосогласованность: семейство Гильберта...")

        config = EmbedConfig(lr=0.001, iterations=4000, T=2000.0)
        for kind in [GeometryKind('hilbert_simplex'), GeometryKind('t_hilbert', 0.5)]:
            run = self.reembed(kind, config)
            self.assertLessEqual(run.final_loss, 1e-2 * run.initial_loss, kind.label)
            print(f"   ✅ {kind.label} (t={kind.t}): {run.initial_loss:.3e} -> {run.final_loss:.3e}")


class TestDeskDatasets(unittest.TestCase):
    """Снижение потери на наборах из 50 точек"""

    def test_loss_halves(self):
        """Тест снижения потери не менее чем вдвое для каждой геометрии"""
        print("📉 Наборы points, er, ba (n = 50)...")

        config = EmbedConfig(dim=5, iterations=500, normalize=True)
        for spec in DESK_DATASETS:
            dataset = generate_dataset(spec, seed=3)
            for kind in DEFAULT_KINDS:
                run = optimize_embedding(dataset, kind, 5, config)
                self.assertLessEqual(run.final_loss, 0.5 * run.initial_loss, f"{spec.source}/{kind.label}")
                print(f"   ✅ {spec.source}/{kind.label}: {run.initial_loss:.3f} -> {run.final_loss:.3f}")

    def test_deterministic(self):
        """Тест побайтовой воспроизводимости по зерну"""
        print("🎲 Воспроизводимость сравнения геометрий...")

        config = EmbedConfig(iterations=50)
        first = compare_geometries(DatasetSpec('er', n=20), [2, 4], config=config, seed=9)
        second = compare_geometries(DatasetSpec('er', n=20), [2, 4], config=config, seed=9)
        self.assertEqual(first.to_csv(index=False), second.to_csv(index=False))
        print(f"   ✅ {len(first)} прогонов совпадают")


if __name__ == '__main__':
    unittest.main()
