"""
Скрипт для запуска Flask приложения
"""

import logging
import os
import sys

# Добавляем src в путь
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from tempered.api import app
from tempered.config import settings
from tempered.utils import setup_logging

logger = logging.getLogger('run_app')

if __name__ == "__main__":
    setup_logging()
    logger.info(f"Запуск tempered на порту {settings.flask_port}")
    logger.info(f"Режим отладки: {settings.debug}")

    app.run(host='0.0.0.0', port=settings.flask_port, debug=settings.debug)
