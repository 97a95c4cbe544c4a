"""
Конфигурация численных экспериментов
Значения по умолчанию переопределяются переменными окружения и файлом .env
"""

import os
from typing import Any, Dict, Optional

from dotenv import dotenv_values, load_dotenv

# Подхватываем .env из рабочей директории, если он есть
load_dotenv()


class Settings:
    """Настройки экспериментов и сервиса"""

    def __init__(self):
        # Сетка барицентрических ячеек для шаров и бисектрис
        self.grid_resolution = int(os.getenv('TEMPERED_GRID_RESOLUTION', '400'))

        # Сглаживание дифференцируемых расстояний
        self.smoothing_T = float(os.getenv('TEMPERED_SMOOTHING_T', '20.0'))
        self.mismatch_delta = float(os.getenv('TEMPERED_MISMATCH_DELTA', '0.02'))
        self.histogram_bins = int(os.getenv('TEMPERED_HISTOGRAM_BINS', '101'))

        # Вывод и логирование
        self.output_dir = os.getenv('TEMPERED_OUTPUT_DIR', 'output')
        self.log_level = os.getenv('TEMPERED_LOG_LEVEL', 'INFO')
        self.workers = int(os.getenv('TEMPERED_WORKERS', '1'))

        # HTTP сервис
        self.flask_port = int(os.getenv('FLASK_PORT', '5000'))
        self.flask_env = os.getenv('FLASK_ENV', 'production')

    @property
    def debug(self) -> bool:
        """Режим отладки сервиса"""
        return self.flask_env == 'development'

    def as_dict(self) -> Dict[str, Any]:
        """Получить все параметры словарем"""
        return {
            'grid_resolution': self.grid_resolution,
            'smoothing_T': self.smoothing_T,
            'mismatch_delta': self.mismatch_delta,
            'histogram_bins': self.histogram_bins,
            'output_dir': self.output_dir,
            'log_level': self.log_level,
            'workers': self.workers,
            'flask_port': self.flask_port,
            'flask_env': self.flask_env,
        }


def load_experiment_file(path: Optional[str]) -> Dict[str, str]:
    """
    Прочитать плоский файл эксперимента формата key=value

    Args:
        path: Путь к файлу (None - пустая конфигурация)

    Returns:
        Словарь строковых значений; ключи приводятся к нижнему регистру,
        дефисы заменяются подчеркиваниями
    """
    if not path:
        return {}
    if not os.path.exists(path):
        raise FileNotFoundError(f"Файл конфигурации не найден: {path}")

    values = dotenv_values(path)
    return {
        key.strip().lower().replace('-', '_'): value
        for key, value in values.items()
        if value is not None
    }


# Глобальный экземпляр настроек
settings = Settings()
