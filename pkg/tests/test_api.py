"""
Тесты для REST API
"""

import unittest
import sys
import os

# Добавляем путь к src для импорта модулей
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from tempered.api import app


class TestTemperedAPI(unittest.TestCase):
    """Тесты для эндпоинтов API"""

    def setUp(self):
        app.config['TESTING'] = True
        self.client = app.test_client()

    def test_health(self):
        """Тест health check"""
        response = self.client.get('/api/v1/health')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.get_json()['status'], 'healthy')

    def test_distance(self):
        """Тест t-расстояний между мерами"""
        response = self.client.post('/api/v1/distance', json={'t': 1.5, 'p': [0.25, 0.25], 'q': [0.01, 0.81]})
        self.assertEqual(response.status_code, 200)
        data = response.get_json()
        self.assertAlmostEqual(data['t_hilbert'], 16 / 9)
        self.assertAlmostEqual(data['t_funk_pq'], 1.6)
        self.assertAlmostEqual(data['t_funk_qp'], 8 / 9)

    def test_distance_unnormalized(self):
        """Тест ненормированных мер: t-Гильберт проективно инвариантен"""
        response = self.client.post('/api/v1/distance', json={'t': 1.5, 'p': [2.0, 2.0], 'q': [0.04, 3.24]})
        self.assertEqual(response.status_code, 200)
        self.assertAlmostEqual(response.get_json()['t_hilbert'], 16 / 9)
        self.assertAlmostEqual(response.get_json()['t_funk_pq'], 1.6)

    def test_distance_raw(self):
        """Тест проективного режима"""
        response = self.client.post('/api/v1/distance', json={'t': 1.0, 'p': [1.0, 2.0], 'q': [2.0, 4.0], 'raw': True})
        self.assertEqual(response.status_code, 200)
        data = response.get_json()
        self.assertAlmostEqual(data['t_hilbert'], 0.0)
        self.assertNotIn('t_funk_pq', data)

    def test_distance_bad_requests(self):
        """Тест ответов 400"""
        response = self.client.post('/api/v1/distance', json={'t': 1.0, 'p': [0.5, 0.5]})
        self.assertEqual(response.status_code, 400)
        self.assertIn('q', response.get_json()['error'])

        response = self.client.post('/api/v1/distance', json={'t': 2.5, 'p': [0.5, 0.5], 'q': [0.2, 0.8]})
        self.assertEqual(response.status_code, 400)

        response = self.client.post('/api/v1/distance', json={'t': 1.0, 'p': [0.0, 1.0], 'q': [0.2, 0.8]})
        self.assertEqual(response.status_code, 400)

        response = self.client.post('/api/v1/distance', data='not json', content_type='text/plain')
        self.assertEqual(response.status_code, 400)

    def test_model_distance(self):
        """Тест t-расстояния в моделях"""
        response = self.client.post('/api/v1/models/distance',
                                    json={'t': 1.0, 'r': [0.0], 's': [0.6], 'model': 'klein'})
        self.assertEqual(response.status_code, 200)
        data = response.get_json()
        self.assertEqual(data['model'], 'klein')
        self.assertAlmostEqual(data['distance'], 0.6931471805599453)

    def test_model_distance_bad_requests(self):
        """Тест ответов 400 для моделей"""
        response = self.client.post('/api/v1/models/distance',
                                    json={'t': 1.0, 'r': [0.0, 0.0], 's': [0.9, 0.9], 'model': 'klein'})
        self.assertEqual(response.status_code, 400)

        response = self.client.post('/api/v1/models/distance',
                                    json={'t': 1.0, 'r': [0.0], 's': [0.5], 'model': 'sphere'})
        self.assertEqual(response.status_code, 400)


if __name__ == '__main__':
    unittest.main()
