"""
Конфигурация приложения
"""

from .settings import Settings, settings, load_experiment_file

__all__ = ['Settings', 'settings', 'load_experiment_file']
