"""Additive codes over GF(4) and the quantum codes they describe."""

from .addcode import (
    AdditiveCode,
    NotSelfOrthogonal,
    QuantumParams,
    WeightEnumerator,
    dual,
    is_self_orthogonal,
    macwilliams,
    quantum_params,
    weight_distribution,
)
from .enumeration import BudgetExceeded
from .gf4core import Gf4, Gf4Vector, SymplecticVector

__all__ = [
    "AdditiveCode",
    "BudgetExceeded",
    "Gf4",
    "Gf4Vector",
    "NotSelfOrthogonal",
    "QuantumParams",
    "SymplecticVector",
    "WeightEnumerator",
    "dual",
    "is_self_orthogonal",
    "macwilliams",
    "quantum_params",
    "weight_distribution",
]
