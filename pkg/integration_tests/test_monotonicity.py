"""
Тест изометрий, монотонности огрубления и сжатия положительными отображениями
"""

import sys
import os
import unittest

import numpy as np

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(os.path.dirname(__file__)), 'src'))

from tempered.algebra import log_t_exp
from tempered.geometry import (
    t_funk_cosimplex, t_hilbert_cosimplex, t_hilbert_raw, isometry_unconstrained,
    isometry_constrained, coarse_grain, random_partition, check_contraction
)
from tempered.parameterization import random_cosimplex

N_TRIALS = 10000
TEMPERATURES = [0.5, 0.8, 1.0, 1.2, 1.5]


class TestIsometryRoutes(unittest.TestCase):
    """Тесты совпадения трех путей вычисления t-Гильберта"""

    def test_routes_agree(self):
        """Тест ρ_{t-HG} = t-вариация = t-NH = log_t exp ρ_{1-HG}"""
        print("🔄 Сравнение путей вычисления t-Гильберта...")
        rng = np.random.default_rng(11)

        worst = 0.0
        for i in range(N_TRIALS):
            t = TEMPERATURES[i % len(TEMPERATURES)]
            d = int(rng.integers(2, 17))
            p, q = random_cosimplex(rng, d, t, 2)
            direct = t_hilbert_cosimplex(p, q)
            classic = t_hilbert_raw(p.codensity(), q.codensity(), 1.0)
            via_link = float(log_t_exp(p.temp.t_star * classic, t))
            for other in [isometry_unconstrained(p, q), isometry_constrained(p, q), via_link]:
                gap = abs(other - direct) / (1.0 + direct)
                worst = max(worst, gap)
                self.assertLess(gap, 1e-9, f"расхождение при t={t}, d={d}")

        print(f"   ✅ {N_TRIALS} пар, максимальное относительное расхождение {worst:.2e}")


class TestCoarseGraining(unittest.TestCase):
    """Тесты монотонности при огрублении"""

    def test_no_violations(self):
        """Тест неувеличения t-Функа и t-Гильберта"""
        print("📉 Монотонность огрубления...")
        rng = np.random.default_rng(12)

        violations = 0
        for i in range(N_TRIALS):
            t = TEMPERATURES[i % len(TEMPERATURES)]
            d = int(rng.integers(2, 33))
            p, q = random_cosimplex(rng, d, t, 2)
            partition = random_partition(rng, d)
            p_c, q_c = coarse_grain(p, partition), coarse_grain(q, partition)

            funk_before = t_funk_cosimplex(p, q)
            hilbert_before = t_hilbert_cosimplex(p, q)
            if t_funk_cosimplex(p_c, q_c) > funk_before + 1e-12 * (1.0 + funk_before):
                violations += 1
            if t_hilbert_cosimplex(p_c, q_c) > hilbert_before + 1e-12 * (1.0 + hilbert_before):
                violations += 1

        self.assertEqual(violations, 0)
        print(f"   ✅ 0 нарушений на {N_TRIALS} парах с разбиениями")


class TestContraction(unittest.TestCase):
    """Тесты сжатия положительными матрицами"""

    def test_no_expansion(self):
        """Тест отсутствия растяжений"""
        print("🗜️ Сжатие положительными матрицами...")
        rng = np.random.default_rng(13)

        expansions = 0
        for i in range(N_TRIALS):
            t = TEMPERATURES[i % len(TEMPERATURES)]
            d = int(rng.integers(2, 9))
            A = rng.uniform(0.1, 10.0, size=(d, d))
            p, q = random_cosimplex(rng, d, t, 2)
            before, after = check_contraction(A, p, q)
            if after > before + 1e-12 * (1.0 + before):
                expansions += 1

        self.assertEqual(expansions, 0)
        print(f"   ✅ 0 растяжений на {N_TRIALS} матрицах")

    def test_stronger_contraction_above_one(self):
        """Тест κ_{t=1.5} >= κ_{t=1} на одних и тех же векторах"""
        print("🗜️ Сравнение коэффициентов сжатия t = 1.5 и t = 1...")
        rng = np.random.default_rng(14)

        held = 0
        trials = 0
        for _ in range(N_TRIALS):
            d = int(rng.integers(2, 9))
            A = rng.uniform(0.1, 10.0, size=(d, d))
            p, q = rng.uniform(0.05, 1.0, d), rng.uniform(0.05, 1.0, d)
            ratios = {}
            for t in [1.0, 1.5]:
                before = t_hilbert_raw(p, q, t)
                if before == 0:
                    break
                ratios[t] = t_hilbert_raw(A @ p, A @ q, t) / before
            if len(ratios) < 2:
                continue
            trials += 1
            if ratios[1.5] >= ratios[1.0] - 1e-12:
                held += 1

        self.assertGreater(trials, 0)
        share = held / trials
        self.assertGreaterEqual(share, 0.99)
        print(f"   ✅ Неравенство выполнено в {share:.2%} испытаний")


if __name__ == '__main__':
    unittest.main()
