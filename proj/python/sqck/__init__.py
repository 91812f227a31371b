"""Exact structure constants and second cohomology of the quaternionic
quasi-unitary Cayley-Klein family."""

from ._core import (
    algebra_json,
    dimension,
    h2_dim,
    h2_json,
    jacobi_ok,
    omega_ab,
    realization_ok,
    type3_count,
)

__all__ = [
    "algebra_json",
    "dimension",
    "h2_dim",
    "h2_json",
    "jacobi_ok",
    "omega_ab",
    "realization_ok",
    "type3_count",
]
