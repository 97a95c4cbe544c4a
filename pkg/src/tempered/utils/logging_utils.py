"""
Настройка логирования
"""

import logging
import sys
from typing import Optional, TextIO

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def setup_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> None:
    """
    Настроить корневой логгер

    Args:
        level: Уровень логирования (по умолчанию из настроек)
        stream: Поток вывода (по умолчанию stdout, CLI передает stderr)
    """
    if level is None:
        from ..config import settings
        level = settings.log_level

    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format=LOG_FORMAT,
        stream=stream or sys.stdout,
        force=True,
    )
