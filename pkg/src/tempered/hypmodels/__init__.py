"""
t-модели Клейна и Пуанкаре
"""

from .disk import (
    MODELS, MODEL_CHI, DiskPoint, psi, klein_distance, poincare_distance, tempered_klein, tempered_poincare,
    model_distance, klein_to_poincare, poincare_to_klein, fractional_point, fractional_sweep
)

__all__ = [
    'MODELS', 'MODEL_CHI', 'DiskPoint', 'psi', 'klein_distance', 'poincare_distance',
    'tempered_klein', 'tempered_poincare', 'model_distance', 'klein_to_poincare', 'poincare_to_klein',
    'fractional_point', 'fractional_sweep'
]
