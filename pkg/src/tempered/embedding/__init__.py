"""
Вложение матриц расстояний в евклидову, гиперболическую и (t-)гильбертову геометрии
"""

from .datasets import DatasetSpec, DistanceDataset, from_points, from_graph, generate_dataset
from .geometries import (
    KINDS, GeometryKind, geometry_distance, pairwise_distances, smoothed_distances_and_jacobian,
    sample_in_geometry, initial_chart, retract, exp_map_zero, lift_to_hyperboloid
)
from .optimizer import (
    AdamOptimizer, EmbedConfig, EmbeddingRun, embedding_loss, smoothed_loss_and_gradient, optimize_embedding
)
from .harness import RESULT_COLUMNS, DEFAULT_KINDS, compare_geometries

__all__ = [
    'DatasetSpec', 'DistanceDataset', 'from_points', 'from_graph', 'generate_dataset',
    'KINDS', 'GeometryKind', 'geometry_distance', 'pairwise_distances', 'smoothed_distances_and_jacobian',
    'sample_in_geometry', 'initial_chart', 'retract', 'exp_map_zero', 'lift_to_hyperboloid',
    'AdamOptimizer', 'EmbedConfig', 'EmbeddingRun', 'embedding_loss', 'smoothed_loss_and_gradient',
    'optimize_embedding', 'RESULT_COLUMNS', 'DEFAULT_KINDS', 'compare_geometries'
]
