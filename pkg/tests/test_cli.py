"""
Тесты для командной строки
"""

import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest.mock import patch

import numpy as np
import pandas as pd

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from tempered.cli import COMMANDS, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, run
from tempered.config import settings


def invoke(*argv):
    """Выполнить команду, вернуть (код, stdout)"""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue()


class TestDist(unittest.TestCase):
    """Тесты для подкоманды dist"""

    def test_csv(self):
        """Тест CSV вывода"""
        code, text = invoke('dist', '--t', '1.5', '--p', '0.25,0.25', '--q', '0.01,0.81')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        self.assertEqual(list(frame.columns), ['t', 't_hilbert', 't_funk_pq', 't_funk_qp'])
        self.assertAlmostEqual(frame['t_hilbert'].iloc[0], 16 / 9)
        self.assertAlmostEqual(frame['t_funk_pq'].iloc[0], 1.6)
        self.assertAlmostEqual(frame['t_funk_qp'].iloc[0], 8 / 9)

    def test_json(self):
        """Тест JSON вывода"""
        code, text = invoke('dist', '--t', '1.0', '--p', '0.2,0.8', '--q', '0.5,0.5', '--json')
        self.assertEqual(code, EXIT_OK)
        records = json.loads(text)
        self.assertEqual(len(records), 1)
        self.assertAlmostEqual(records[0]['t_hilbert'], 1.3862943611198906)

    def test_unnormalized_measures(self):
        """Тест ненормированных положительных мер"""
        code, text = invoke('dist', '--t', '1', '--p', '1,4', '--q', '2,2', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(json.loads(text)[0]['t_hilbert'], np.log(4.0))
        code, text = invoke('dist', '--t', '1.5', '--p', '3,1,2', '--q', '3,1,2', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertAlmostEqual(json.loads(text)[0]['t_hilbert'], 0.0)

    def test_raw(self):
        """Тест проективного режима"""
        code, text = invoke('dist', '--t', '1.5', '--p', '1,2', '--q', '2,1', '--raw', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(set(json.loads(text)[0]), {'t', 't_hilbert'})


class TestExitCodes(unittest.TestCase):
    """Тесты для кодов выхода"""

    def test_usage_errors(self):
        """Тест ошибок использования"""
        self.assertEqual(invoke('dist', '--p', '0.5,0.5')[0], EXIT_USAGE)
        self.assertEqual(invoke('unknown')[0], EXIT_USAGE)
        self.assertEqual(invoke('dist', '--t', 'abc', '--p', '1', '--q', '1')[0], EXIT_USAGE)
        self.assertEqual(invoke('dist', '--t', '0.5,0.8', '--p', '0.5,0.5', '--q', '0.2,0.8')[0], EXIT_USAGE)
        self.assertEqual(invoke('balls', '--p', '0.2,0.3,0.5')[0], EXIT_USAGE)
        self.assertEqual(invoke('dist', '--config', '/nonexistent/experiment.env', '--p', '1', '--q', '1')[0], EXIT_USAGE)

    def test_numeric_errors(self):
        """Тест численных ошибок"""
        self.assertEqual(invoke('dist', '--t', '2.5', '--p', '0.5,0.5', '--q', '0.2,0.8')[0], EXIT_NUMERIC)
        self.assertEqual(invoke('dist', '--t', '1.0', '--p', '0.0,1.0', '--q', '0.2,0.8')[0], EXIT_NUMERIC)
        self.assertEqual(invoke('dist', '--t', '1.0', '--p', '0.5,0.5', '--q', '0.2,0.3,0.5')[0], EXIT_NUMERIC)

    def test_all_commands_registered(self):
        """Тест списка подкоманд"""
        self.assertEqual(set(COMMANDS), {'dist', 'balls', 'bisector', 'approx-error', 'embed',
                                         'calculus-check', 'models'})


class TestCommands(unittest.TestCase):
    """Тесты для остальных подкоманд"""

    def test_balls(self):
        """Тест шаров для списка радиусов"""
        code, text = invoke('balls', '--t', '0.8', '--p', '0.2,0.3,0.5', '--radius-list', '0.5,1.0', '--grid', '12')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        self.assertEqual(list(frame.columns), ['t', 'which', 'radius', 'x', 'y', 'value'])
        self.assertEqual(set(frame['radius']), {0.5, 1.0})
        self.assertTrue((frame['value'] <= frame['radius']).all())

    def test_bisector(self):
        """Тест бисектрисы"""
        code, text = invoke('bisector', '--p', '0.6,0.2,0.2', '--q', '0.2,0.6,0.2', '--grid', '20')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        self.assertTrue(set(frame['region']) <= {'bisector', 'equality'})
        self.assertIn('bisector', set(frame['region']))

    def test_approx_error(self):
        """Тест гистограммы ошибки"""
        code, text = invoke('approx-error', '--t', '0.8', '--T', '10', '--d', '4', '--n', '20', '--workers', '1')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        self.assertEqual(frame['count'].sum(), 20)
        self.assertEqual(list(frame.columns), ['t', 'T', 'delta', 'd', 'bin', 'count', 'mean', 'sd'])

    def test_approx_error_json(self):
        """Тест JSON записи гистограммы"""
        code, text = invoke('approx-error', '--t', '1.2', '--T', '10', '--d', '8', '--n', '20',
                            '--workers', '1', '--json')
        self.assertEqual(code, EXIT_OK)
        record = json.loads(text)
        self.assertIsInstance(record, dict)
        self.assertEqual(set(record), {'t', 'T', 'delta', 'd', 'bins', 'counts', 'mean', 'sd'})
        self.assertEqual(record['d'], 8)
        self.assertEqual(len(record['bins']), len(record['counts']))
        self.assertEqual(sum(record['counts']), 20)

    def test_embed(self):
        """Тест сравнения геометрий"""
        code, text = invoke('embed', '--dataset', 'points', '--n', '6', '--dims', '2', '--iterations', '5', '--json')
        self.assertEqual(code, EXIT_OK)
        records = json.loads(text)
        self.assertEqual(len(records), 4)
        self.assertEqual(records[-1]['geometry'], 't_hilbert')
        self.assertEqual(records[-1]['t'], 0.5)

    def test_calculus_check(self):
        """Тест проверок t-исчисления"""
        code, text = invoke('calculus-check', '--t', '0.8', '--n', '2000')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        self.assertEqual(len(frame), 5)
        self.assertTrue((frame['abs_error'] < 1e-3).all())

    def test_models(self):
        """Тест дробных точек по умолчанию"""
        code, text = invoke('models')
        self.assertEqual(code, EXIT_OK)
        frame = pd.read_csv(io.StringIO(text))
        self.assertEqual(list(frame['t']), [0.8, 1.0, 1.2])
        self.assertTrue(frame['x'].is_monotonic_decreasing)


class TestOutput(unittest.TestCase):
    """Тесты для файлового вывода и файла конфигурации"""

    def setUp(self):
        self.workdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.workdir, ignore_errors=True)

    def test_out_file(self):
        """Тест записи результата в файл"""
        path = os.path.join(self.workdir, 'dist.json')
        code, text = invoke('dist', '--t', '1.5', '--p', '0.25,0.25', '--q', '0.01,0.81', '--json', '--out', path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, '')
        with open(path, encoding='utf-8') as handle:
            self.assertAlmostEqual(json.load(handle)[0]['t_hilbert'], 16 / 9)

    def test_bare_out_name(self):
        """Тест голого имени --out относительно текущего каталога"""
        cwd = os.getcwd()
        os.chdir(self.workdir)
        try:
            code, text = invoke('dist', '--t', '1', '--p', '1,4', '--q', '2,2', '--out', 'dist.csv')
        finally:
            os.chdir(cwd)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, '')
        self.assertTrue(os.path.exists(os.path.join(self.workdir, 'dist.csv')))
        self.assertFalse(os.path.exists(os.path.join(self.workdir, settings.output_dir)))

    def test_out_without_path(self):
        """Тест --out без значения: файл в каталоге вывода"""
        target = os.path.join(self.workdir, 'results')
        with patch.object(settings, 'output_dir', target):
            code, _ = invoke('dist', '--t', '1', '--p', '1,4', '--q', '2,2', '--json', '--out')
        self.assertEqual(code, EXIT_OK)
        with open(os.path.join(target, 'dist.json'), encoding='utf-8') as handle:
            self.assertAlmostEqual(json.load(handle)[0]['t_hilbert'], np.log(4.0))

    def test_config_file(self):
        """Тест значений из файла конфигурации"""
        path = os.path.join(self.workdir, 'experiment.env')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write('t=1.5\nseed=3\n')
        code, text = invoke('dist', '--config', path, '--p', '0.25,0.25', '--q', '0.01,0.81', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(text)[0]['t'], 1.5)

    def test_command_line_wins(self):
        """Тест приоритета флагов командной строки над файлом"""
        path = os.path.join(self.workdir, 'experiment.env')
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write('t=1.5\n')
        code, text = invoke('dist', '--config', path, '--t', '1.0', '--p', '0.2,0.8', '--q', '0.5,0.5', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(text)[0]['t'], 1.0)


if __name__ == '__main__':
    unittest.main()
