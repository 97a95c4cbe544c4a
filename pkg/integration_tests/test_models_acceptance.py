"""
Тест t-моделей Клейна и Пуанкаре на случайных парах
"""

import sys
import os
import unittest

import numpy as np

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(os.path.dirname(__file__)), 'src'))

from tempered.geometry import ConvexDomain, t_hilbert_domain
from tempered.hypmodels import (
    psi, klein_distance, tempered_klein, tempered_poincare, klein_to_poincare, fractional_sweep
)

TEMPERATURES = [0.5, 0.8, 1.0, 1.2, 1.5]


def random_disk_point(rng, dim: int) -> np.ndarray:
    direction = rng.standard_normal(dim)
    return 0.95 * rng.uniform(0.0, 1.0) * direction / np.linalg.norm(direction)


class TestModelsAcceptance(unittest.TestCase):
    """Проверки моделей в шаре размерностей 2, 3 и 5"""

    def setUp(self):
        self.rng = np.random.default_rng(61)

    def test_klein_poincare_agree(self):
        """Тест равенства t-расстояний под отображением Клейн -> Пуанкаре"""
        print("🌐 Клейн и Пуанкаре на 10³ парах...")

        worst = 0.0
        for i in range(1000):
            t = TEMPERATURES[i % len(TEMPERATURES)]
            dim = [2, 3, 5][i % 3]
            r, s = random_disk_point(self.rng, dim), random_disk_point(self.rng, dim)
            klein = tempered_klein(r, s, t)
            poincare = tempered_poincare(klein_to_poincare(r), klein_to_poincare(s), t)
            gap = abs(poincare - klein) / max(1.0, klein)
            worst = max(worst, gap)
            self.assertLess(gap, 1e-10)

        print(f"   ✅ Максимальное расхождение {worst:.2e}")

    def test_klein_is_tempered_hilbert_of_ball(self):
        """Тест t-Клейна как половины t-Гильберта шара"""
        print("🌐 t-Клейн против t-Гильберта единичного шара...")

        ball = ConvexDomain.unit_ball(3)
        for t in TEMPERATURES:
            for _ in range(50):
                r, s = random_disk_point(self.rng, 3), random_disk_point(self.rng, 3)
                klein = tempered_klein(r, s, t)
                self.assertAlmostEqual(klein, psi(klein_distance(r, s), t, 0.5), places=12)
                self.assertAlmostEqual(klein, 0.5 * t_hilbert_domain(ball, r, s, t), delta=1e-9 * max(1.0, klein))

        print("   ✅ Совпадение на 250 парах")

    def test_fractional_sweep(self):
        """Тест таблицы дробных точек для t ∈ {0.8, 1, 1.2}"""
        print("📍 Дробные точки геодезической...")

        frame = fractional_sweep([0.0, 0.0], [0.6, 0.5], [0.1, 0.25, 0.5], [0.8, 1.0, 1.2])
        self.assertEqual(len(frame), 9)
        for _, group in frame.groupby('alpha'):
            ordered = group.sort_values('t')
            self.assertTrue(ordered['x'].is_monotonic_decreasing)
        print(f"   ✅ {len(frame)} точек, растяжение при t < 1 и сжатие при t > 1")


if __name__ == '__main__':
    unittest.main()
