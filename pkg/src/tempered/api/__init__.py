"""
HTTP сервис t-геометрии
"""

from .tempered_api import app, api

__all__ = ['app', 'api']
