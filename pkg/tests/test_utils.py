"""
Тесты для утилит и конфигурации
"""

import unittest
import sys
import os
import shutil
import tempfile
from unittest.mock import patch

import numpy as np

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from tempered.config import Settings, load_experiment_file
from tempered.utils import MathUtils


class TestMathUtils(unittest.TestCase):
    """Тесты для MathUtils"""

    def test_step_for(self):
        """Тест масштабирования шага"""
        self.assertEqual(MathUtils.step_for(0.5), MathUtils.FD_STEP)
        self.assertAlmostEqual(MathUtils.step_for(-40.0), 40.0 * MathUtils.FD_STEP)

    def test_central_difference(self):
        """Тест центральной разности"""
        self.assertAlmostEqual(MathUtils.central_difference(np.sin, 0.3), np.cos(0.3), places=8)

    def test_numeric_gradient(self):
        """Тест градиента квадратичной формы"""
        x = np.array([1.0, -2.0, 0.5])
        grad = MathUtils.numeric_gradient(lambda v: float(np.sum(v ** 2)), x)
        np.testing.assert_allclose(grad, 2.0 * x, atol=1e-8)

    def test_relative_error(self):
        """Тест относительной ошибки с нижней границей знаменателя"""
        self.assertAlmostEqual(MathUtils.relative_error([1.1], [1.0]), 0.1)
        self.assertAlmostEqual(MathUtils.relative_error([20.0], [10.0]), 1.0)
        self.assertAlmostEqual(MathUtils.relative_error([0.01], [0.0]), 0.01)

    def test_statistics(self):
        """Тест среднего и стандартного отклонения"""
        self.assertEqual(MathUtils.calculate_average([]), 0.0)
        self.assertAlmostEqual(MathUtils.calculate_average([1.0, 2.0, 3.0]), 2.0)
        self.assertEqual(MathUtils.calculate_standard_deviation([5.0]), 0.0)
        self.assertAlmostEqual(MathUtils.calculate_standard_deviation([1.0, 2.0, 3.0]), 1.0)

    def test_observed_order(self):
        """Тест порядка сходимости по точным степенным ошибкам"""
        sizes = [100, 200, 400]
        self.assertAlmostEqual(MathUtils.observed_order([1.0 / n for n in sizes], sizes), 1.0)
        self.assertAlmostEqual(MathUtils.observed_order([3.0 / n ** 2 for n in sizes], sizes), 2.0)


class TestSettings(unittest.TestCase):
    """Тесты для настроек и файла эксперимента"""

    def setUp(self):
        self.workdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.workdir, ignore_errors=True)

    def test_environment_overrides(self):
        """Тест переопределения значений переменными окружения"""
        with patch.dict(os.environ, {'TEMPERED_SMOOTHING_T': '50', 'FLASK_ENV': 'development'}):
            settings = Settings()
        self.assertEqual(settings.smoothing_T, 50.0)
        self.assertTrue(settings.debug)
        self.assertEqual(settings.as_dict()['smoothing_T'], 50.0)

    def test_experiment_file(self):
        """Тест чтения файла key=value"""
        path = os.path.join(self.workdir, 'experiment.env')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write('smoothing-T=10\nradius-list=0.5,1.0\n# комментарий\n')
        self.assertEqual(load_experiment_file(path), {'smoothing_t': '10', 'radius_list': '0.5,1.0'})
        self.assertEqual(load_experiment_file(None), {})
        with self.assertRaises(FileNotFoundError):
            load_experiment_file(os.path.join(self.workdir, 'missing.env'))


if __name__ == '__main__':
    unittest.main()
