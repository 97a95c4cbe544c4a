"""
REST API для вычисления t-расстояний
"""

import logging
from typing import Any, Dict, Tuple

from flask import Flask, request
from flask_cors import CORS
from flask_restx import Api, Resource, fields, Namespace

from ..algebra import Temperature
from ..errors import TemperedError
from ..geometry import t_funk_cosimplex, t_hilbert_raw
from ..hypmodels import MODELS, model_distance
from ..parameterization import CoSimplexPoint

logger = logging.getLogger(__name__)

app = Flask(__name__)

# Настройка CORS
CORS(app)

# Настройка Swagger
api = Api(
    app,
    version='1.0',
    title='Tempered Geometry API',
    description='API для t-расстояний Гильберта/Функа и t-моделей Клейна/Пуанкаре',
    doc='/swagger/'
)


@app.route('/swagger.json')
def swagger_json():
    """Swagger JSON definition"""
    return api.__schema__


ns = Namespace('api', description='t-геометрия', path='/api/v1')
api.add_namespace(ns)

# Модели данных для Swagger
distance_request_model = api.model('DistanceRequest', {
    't': fields.Float(required=True, description='Температура t < 2'),
    'p': fields.List(fields.Float, required=True, description='Положительная мера p̃'),
    'q': fields.List(fields.Float, required=True, description='Положительная мера q̃'),
    'raw': fields.Boolean(description='Проективный режим без нормировки на ко-симплекс'),
})

distance_response_model = api.model('DistanceResponse', {
    't': fields.Float(description='Температура'),
    't_hilbert': fields.Float(description='t-расстояние Гильберта'),
    't_funk_pq': fields.Float(description='t-расстояние Функа от p к q'),
    't_funk_qp': fields.Float(description='t-расстояние Функа от q к p'),
})

model_request_model = api.model('ModelDistanceRequest', {
    't': fields.Float(required=True, description='Температура t < 2'),
    'r': fields.List(fields.Float, required=True, description='Точка открытого единичного шара'),
    's': fields.List(fields.Float, required=True, description='Точка открытого единичного шара'),
    'model': fields.String(required=True, enum=list(MODELS), description='Модель'),
})

model_response_model = api.model('ModelDistanceResponse', {
    'model': fields.String(description='Модель'),
    't': fields.Float(description='Температура'),
    'distance': fields.Float(description='t-расстояние модели'),
})

error_model = api.model('Error', {
    'error': fields.String(description='Описание ошибки')
})


def _require_fields(data: Any, required) -> Tuple[bool, str]:
    """Проверить наличие обязательных полей"""
    if not isinstance(data, dict) or not data:
        return False, 'Отсутствуют данные'
    for field in required:
        if field not in data:
            return False, f'Отсутствует обязательное поле: {field}'
    return True, ''


@ns.route('/health')
class HealthCheck(Resource):
    @ns.doc(tags=['Система'])
    def get(self):
        """
        Health check endpoint

        Проверяет работоспособность API
        """
        return {'status': 'healthy', 'service': 'tempered'}, 200


@ns.route('/distance')
class Distance(Resource):
    @ns.expect(distance_request_model)
    @ns.response(200, 'Успех', distance_response_model)
    @ns.response(400, 'Некорректные данные', error_model)
    @ns.response(500, 'Внутренняя ошибка', error_model)
    @ns.doc(tags=['Расстояния'])
    def post(self):
        """
        t-расстояния между двумя мерами

        Меры нормируются на ко-симплекс (t-Гильберт от нормировки не зависит).
        В режиме raw возвращается только проективный t-Гильберт.
        """
        data = request.get_json(silent=True)
        ok, message = _require_fields(data, ['t', 'p', 'q'])
        if not ok:
            return {'error': message}, 400

        try:
            temp = Temperature(float(data['t']))
            result: Dict[str, Any] = {'t': temp.t}
            if data.get('raw'):
                result['t_hilbert'] = t_hilbert_raw(data['p'], data['q'], temp)
            else:
                p_tilde = CoSimplexPoint.from_measure(data['p'], temp)
                q_tilde = CoSimplexPoint.from_measure(data['q'], temp)
                result['t_hilbert'] = t_hilbert_raw(p_tilde.values, q_tilde.values, temp)
                result['t_funk_pq'] = t_funk_cosimplex(p_tilde, q_tilde)
                result['t_funk_qp'] = t_funk_cosimplex(q_tilde, p_tilde)
            return result, 200
        except (TemperedError, TypeError, ValueError) as e:
            logger.warning(f"⚠️ Некорректный запрос /distance: {e}")
            return {'error': str(e)}, 400
        except Exception as e:
            logger.error(f"❌ Ошибка обработки /distance: {e}")
            return {'error': f'Ошибка обработки запроса: {str(e)}'}, 500


@ns.route('/models/distance')
class ModelDistance(Resource):
    @ns.expect(model_request_model)
    @ns.response(200, 'Успех', model_response_model)
    @ns.response(400, 'Некорректные данные', error_model)
    @ns.response(500, 'Внутренняя ошибка', error_model)
    @ns.doc(tags=['Модели'])
    def post(self):
        """t-расстояние в модели Клейна или Пуанкаре"""
        data = request.get_json(silent=True)
        ok, message = _require_fields(data, ['t', 'r', 's', 'model'])
        if not ok:
            return {'error': message}, 400

        try:
            temp = Temperature(float(data['t']))
            distance = model_distance(data['model'], data['r'], data['s'], temp)
            return {'model': data['model'], 't': temp.t, 'distance': distance}, 200
        except (TemperedError, TypeError, ValueError) as e:
            logger.warning(f"⚠️ Некорректный запрос /models/distance: {e}")
            return {'error': str(e)}, 400
        except Exception as e:
            logger.error(f"❌ Ошибка обработки /models/distance: {e}")
            return {'error': f'Ошибка обработки запроса: {str(e)}'}, 500


if __name__ == '__main__':
    app.run(debug=True, host='0.0.0.0', port=5000)
