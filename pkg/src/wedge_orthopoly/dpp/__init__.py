"""Determinantal point processes on the wedge"""

from .basis import DiscretizationError, DiscretizedBasis, coulomb_basis, kernel_matrix, orthonormal_wedge_basis
from .gaps import GapStatistics, curve_distance, gap_statistics
from .sampler import PointSample, SamplingError, sample_dpp, sample_many

__all__ = [
    "DiscretizationError",
    "DiscretizedBasis",
    "GapStatistics",
    "PointSample",
    "SamplingError",
    "coulomb_basis",
    "curve_distance",
    "gap_statistics",
    "kernel_matrix",
    "orthonormal_wedge_basis",
    "sample_dpp",
    "sample_many",
]
