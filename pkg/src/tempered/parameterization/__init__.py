"""
Представления дискретных темперированных мер и преобразования между ними
"""

from .cosimplex import (
    CoSimplexPoint, codensity, from_probability, check_compatible,
    random_probability, random_cosimplex, INTERIOR_EPS, DRIFT_TOLERANCE
)
from .links import (
    MinimalParams, NaturalParams, ConstrainedParams, UNCONSTRAINED_CUMULANT,
    minimal_link, minimal_inverse_link, minimal_dual, canonical_density,
    unconstrained_link, unconstrained_inverse_link, unconstrained_dual,
    lagrange_lambda, constrained_link, tangent_projection,
    tempered_softmax, constrained_inverse_link, constrained_dual
)
from .entropy import (
    neg_tempered_entropy, neg_tempered_entropy_measure, minimal_entropy,
    minimal_entropy_gradient, bregman_minimal, generic_bregman
)

__all__ = [
    'CoSimplexPoint', 'codensity', 'from_probability', 'check_compatible',
    'random_probability', 'random_cosimplex', 'INTERIOR_EPS', 'DRIFT_TOLERANCE',
    'MinimalParams', 'NaturalParams', 'ConstrainedParams', 'UNCONSTRAINED_CUMULANT',
    'minimal_link', 'minimal_inverse_link', 'minimal_dual', 'canonical_density',
    'unconstrained_link', 'unconstrained_inverse_link', 'unconstrained_dual',
    'lagrange_lambda', 'constrained_link', 'tangent_projection',
    'tempered_softmax', 'constrained_inverse_link', 'constrained_dual',
    'neg_tempered_entropy', 'neg_tempered_entropy_measure', 'minimal_entropy',
    'minimal_entropy_gradient', 'bregman_minimal', 'generic_bregman'
]
