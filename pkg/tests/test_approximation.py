"""
Тесты для дифференцируемых приближений
"""

import unittest
import sys
import os

import numpy as np

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from tempered.approximation import (
    lse_t, lse_t_gradient, lse_error_bounds, alternate_bound_form, SmoothingConfig,
    diff_funk, diff_hilbert, diff_funk_values, diff_hilbert_values,
    diff_hilbert_gradient, relative_error_histogram
)
from tempered.errors import DomainError
from tempered.geometry import t_funk_cosimplex, t_hilbert_cosimplex
from tempered.parameterization import CoSimplexPoint
from tempered.utils import MathUtils

TEMPERATURES = [0.5, 0.8, 1.0, 1.2, 1.5]


def smooth_pair(rng, d, t):
    p = CoSimplexPoint.from_probability(rng.dirichlet(5.0 * np.ones(d)), t)
    q = CoSimplexPoint.from_probability(rng.dirichlet(5.0 * np.ones(d)), t)
    return p, q


class TestLSE(unittest.TestCase):
    """Тесты для LSE_t"""

    def setUp(self):
        self.rng = np.random.default_rng(5)

    def test_classic(self):
        """Тест классического log-sum-exp"""
        self.assertAlmostEqual(lse_t([0.0, 0.0], 1.0, 1.0), np.log(2.0))
        self.assertAlmostEqual(lse_t([1.0, 1.0], 2.0, 1.0), 1.0 + np.log(2.0) / 2.0)

    def test_single_component(self):
        """Тест LSE_t от одного значения"""
        for t in TEMPERATURES:
            self.assertAlmostEqual(lse_t([0.3], 1.0, t), 0.3, places=12)

    def test_sandwich(self):
        """Тест двусторонних границ"""
        for t in TEMPERATURES:
            for T in [0.5, 2.0, 5.0]:
                for d in [2, 5, 10]:
                    for _ in range(20):
                        x = self.rng.uniform(0.0, 0.9 / T, d) if t > 1 else self.rng.uniform(0.0, 2.0, d)
                        value = lse_t(x, T, t)
                        lower, upper = lse_error_bounds(x, T, t)
                        self.assertLessEqual(lower, value + 1e-12)
                        self.assertLessEqual(value, upper + 1e-12)
                        self.assertGreaterEqual(value, float(np.max(x)) - 1e-12)

    def test_alternate_form(self):
        """Тест совпадения двух форм границ"""
        x = np.array([0.1, 0.4, 0.25])
        for t in TEMPERATURES:
            np.testing.assert_allclose(alternate_bound_form(x, 1.5, t), lse_error_bounds(x, 1.5, t), rtol=1e-12)

    def test_gradient(self):
        """Тест градиента против центральных разностей"""
        for t in TEMPERATURES:
            x = self.rng.uniform(0.0, 0.5, 6)
            analytic = lse_t_gradient(x, 2.0, t)
            numeric = MathUtils.numeric_gradient(lambda v: lse_t(v, 2.0, t), x)
            self.assertLess(MathUtils.relative_error(analytic, numeric), 1e-6)
        self.assertAlmostEqual(float(np.sum(lse_t_gradient([0.1, 0.2, 0.3], 3.0, 1.0))), 1.0)

    def test_saturation(self):
        """Тест насыщения за полюсом exp_t при t > 1"""
        self.assertAlmostEqual(lse_t([3.0, 0.1], 1.0, 1.5), 2.0)
        self.assertAlmostEqual(lse_t([3.0, 0.1], 4.0, 1.5), 0.5)
        with self.assertRaises(DomainError):
            lse_t_gradient([3.0, 0.1], 1.0, 1.5)

    def test_all_clipped(self):
        """Тест ошибки, когда все слагаемые отсекаются"""
        with self.assertRaises(DomainError):
            lse_t([-5.0, -6.0], 1.0, 0.5)

    def test_bad_inputs(self):
        """Тест некорректных аргументов"""
        with self.assertRaises(DomainError):
            lse_t([], 1.0, 1.0)
        with self.assertRaises(DomainError):
            lse_t([0.1], 0.0, 1.0)
        with self.assertRaises(DomainError):
            SmoothingConfig(T=-1.0)
        with self.assertRaises(DomainError):
            SmoothingConfig(delta=-0.1)


class TestDiffDistances(unittest.TestCase):
    """Тесты для дифференцируемых t-Функа и t-Гильберта"""

    def setUp(self):
        self.rng = np.random.default_rng(9)

    def test_overestimate_up_to_one(self):
        """Тест переоценки при t <= 1"""
        cfg = SmoothingConfig(T=10.0)
        for t in [0.5, 0.8, 1.0]:
            for _ in range(20):
                p, q = smooth_pair(self.rng, 5, t)
                self.assertGreaterEqual(diff_funk(p, q, cfg), t_funk_cosimplex(p, q) - 1e-12)
                self.assertGreaterEqual(diff_hilbert(p, q, cfg), t_hilbert_cosimplex(p, q) - 1e-12)

    def test_classic_limit(self):
        """Тест сходимости к точному расстоянию при больших T (t = 1)"""
        cfg = SmoothingConfig(T=1000.0)
        for _ in range(10):
            p, q = smooth_pair(self.rng, 8, 1.0)
            self.assertLess(abs(diff_hilbert(p, q, cfg) - t_hilbert_cosimplex(p, q)), 1e-2)

    def test_symmetry(self):
        """Тест симметрии дифференцируемого t-Гильберта"""
        cfg = SmoothingConfig(T=5.0)
        for t in TEMPERATURES:
            p, q = smooth_pair(self.rng, 4, t)
            self.assertAlmostEqual(diff_hilbert(p, q, cfg), diff_hilbert(q, p, cfg), places=12)

    def test_self_distance_positive(self):
        """Тест ненулевого сглаженного расстояния до себя"""
        p = CoSimplexPoint.from_probability([0.2, 0.3, 0.5], 1.0)
        self.assertAlmostEqual(diff_funk(p, p, SmoothingConfig(T=2.0)), np.log(3.0) / 2.0)

    def test_values_form(self):
        """Тест форм на положительных векторах"""
        cfg = SmoothingConfig(T=3.0)
        p, q = smooth_pair(self.rng, 4, 0.8)
        self.assertAlmostEqual(diff_funk_values(p.values, q.values, 0.8, cfg), diff_funk(p, q, cfg))
        self.assertAlmostEqual(diff_hilbert_values(p.values, q.values, 0.8, cfg), diff_hilbert(p, q, cfg))
        with self.assertRaises(DomainError):
            diff_funk_values([1.0, 0.0], [1.0, 1.0], 0.8, cfg)

    def test_mismatched_temperature(self):
        """Тест рассогласованной температуры гладкого максимума"""
        cfg = SmoothingConfig(T=10.0, delta=0.02)
        self.assertTrue(cfg.mismatched)
        self.assertAlmostEqual(cfg.max_temperature(1.3).t, 0.98)
        self.assertAlmostEqual(SmoothingConfig(T=10.0).max_temperature(1.3).t, 1.3)
        p, q = smooth_pair(self.rng, 4, 1.3)
        self.assertTrue(np.isfinite(diff_hilbert(p, q, cfg)))

    def assert_gradient_matches(self, p, q, cfg):
        t = p.t
        grad_p, grad_q = diff_hilbert_gradient(p, q, cfg)
        numeric_p = MathUtils.numeric_gradient(lambda v: diff_hilbert_values(v, q.values, t, cfg), p.values)
        numeric_q = MathUtils.numeric_gradient(lambda v: diff_hilbert_values(p.values, v, t, cfg), q.values)
        self.assertLess(MathUtils.relative_error(grad_p, numeric_p), 1e-5)
        self.assertLess(MathUtils.relative_error(grad_q, numeric_q), 1e-5)

    def test_gradient(self):
        """Тест градиента против центральных разностей при t <= 1"""
        for t in [0.5, 0.8, 1.0]:
            for cfg in [SmoothingConfig(T=0.8), SmoothingConfig(T=0.8, delta=0.02)]:
                p, q = smooth_pair(self.rng, 4, t)
                self.assert_gradient_matches(p, q, cfg)

    def test_gradient_above_one(self):
        """Тест градиента при t > 1 для значений до полюса ⊕_t"""
        for t in [1.2, 1.5]:
            p = CoSimplexPoint.from_probability([0.2, 0.3, 0.5], t)
            q = CoSimplexPoint.from_probability([0.3, 0.3, 0.4], t)
            for cfg in [SmoothingConfig(T=2.0), SmoothingConfig(T=2.0, delta=0.02)]:
                self.assert_gradient_matches(p, q, cfg)

    def test_past_pole(self):
        """Тест ошибки, когда сглаженный t-Функ выходит за полюс ⊕_t"""
        p = CoSimplexPoint.from_probability([0.25, 0.25, 0.25, 0.25], 1.5)
        self.assertAlmostEqual(diff_funk(p, p, SmoothingConfig(T=0.4)), 2.5)
        with self.assertRaises(DomainError):
            diff_hilbert(p, p, SmoothingConfig(T=0.4))


class TestHistogram(unittest.TestCase):
    """Тесты для гистограммы относительной ошибки"""

    def test_record_shape(self):
        """Тест структуры записи"""
        record = relative_error_histogram(30, 4, 0.8, SmoothingConfig(T=10.0), seed=1, bins=11, workers=1)
        self.assertEqual(len(record.bins), 11)
        self.assertEqual(record.total, 30)
        self.assertEqual(set(record.to_dict()), {'t', 'T', 'delta', 'd', 'bins', 'counts', 'mean', 'sd'})
        self.assertIn('"counts"', record.to_json())

    def test_deterministic(self):
        """Тест воспроизводимости по зерну"""
        cfg = SmoothingConfig(T=10.0)
        first = relative_error_histogram(20, 4, 1.2, cfg, seed=3, bins=21, workers=1)
        second = relative_error_histogram(20, 4, 1.2, cfg, seed=3, bins=21, workers=1)
        self.assertEqual(first.counts, second.counts)
        self.assertEqual(first.mean, second.mean)

    def test_sign_direction(self):
        """Тест знака ошибки: недооценка при t > 1, переоценка при t < 1"""
        cfg = SmoothingConfig(T=10.0)
        above = relative_error_histogram(200, 8, 1.2, cfg, seed=0, workers=1)
        below = relative_error_histogram(200, 8, 0.8, cfg, seed=0, workers=1)
        self.assertGreaterEqual(above.negative_share(), 0.9)
        self.assertGreaterEqual(below.positive_share(), 0.9)

    def test_rejects_empty(self):
        """Тест ошибки для n_pairs < 1"""
        with self.assertRaises(DomainError):
            relative_error_histogram(0, 4, 1.0, SmoothingConfig())


if __name__ == '__main__':
    unittest.main()
