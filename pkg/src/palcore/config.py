"""Numeric tolerances and probe thresholds.

All thresholds are overridable; the defaults below are shared by the whole
library. Operations that consume a product of n generator matrices scale the
geometric tolerance by n (see Tolerances.geo_scaled).
"""
from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # relative determinant drift accepted on normalized matrices
    det: float = 1e-12
    # half-width of the trace band reported as parabolic
    classify: float = 1e-9
    # geometric residuals: orthogonality traces, antipodality, endpoint matching
    geo: float = 1e-6
    # relative determinant floor below which a matrix counts as singular
    singular: float = 1e-12

    def geo_scaled(self, word_length: int) -> float:
        return self.geo * max(1, word_length)

    def with_geo(self, geo: float) -> "Tolerances":
        return replace(self, geo=geo)


DEFAULT_TOLERANCES = Tolerances()

# probe thresholds, in hyperbolic length units along the core geodesic
DEFAULT_ESCAPE = 25.0
DEFAULT_PLATEAU = 0.01
