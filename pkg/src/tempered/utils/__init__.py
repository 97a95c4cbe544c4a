"""
Утилиты
"""

from .math_utils import MathUtils
from .logging_utils import setup_logging

__all__ = ['MathUtils', 'setup_logging']
