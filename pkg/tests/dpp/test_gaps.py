"""Tests for gap statistics around a wedge point"""

import numpy as np
import pytest

from wedge_orthopoly.dpp.gaps import complement_curve, curve_distance, gap_statistics
from wedge_orthopoly.dpp.sampler import PointSample
from wedge_orthopoly.wedge.geometry import Segment, WedgePoint


Z0 = WedgePoint(Segment.TOP, 0.5)


def _sample(*points, index=0):
    return PointSample([WedgePoint(seg, t) for seg, t in points], seed=0, index=index)


SAMPLES = [
    _sample((Segment.TOP, 0.4), (Segment.RIGHT, 0.2), index=0),
    _sample((Segment.TOP, 0.9), (Segment.TOP, 0.7), index=1),
    _sample((Segment.RIGHT, 0.95), (Segment.RIGHT, 0.1), index=2),
]


class TestGapStatistics:

    def test_distances(self):
        """Nearest top point per sample, inf when there is none"""
        stats = gap_statistics(SAMPLES, Z0)
        np.testing.assert_allclose(stats.distances[:2], [0.1, 0.2])
        assert np.isinf(stats.distances[2])
        assert stats.n_infinite == 1
        assert stats.n_samples == 3

    def test_unrestricted_distance(self):
        """Unrestricted distances use points on either segment"""
        stats = gap_statistics(SAMPLES, Z0)
        assert stats.unrestricted[2] == pytest.approx(abs(complex(1.0, 0.95) - complex(0.5, 1.0)))

    def test_scale_is_std_of_finite(self):
        """Distances are scaled by the spread of the finite ones"""
        stats = gap_statistics(SAMPLES, Z0)
        assert stats.scale == pytest.approx(0.05)

    def test_curve_counts_infinite_gaps(self):
        """Samples without top points are gaps at every radius"""
        stats = gap_statistics(SAMPLES, Z0, curve_points=50)
        assert len(stats.grid) == 50
        assert stats.complement[0] == pytest.approx(1.0)
        assert stats.complement[-1] == pytest.approx(1.0 / 3.0)
        assert np.all(np.diff(stats.complement) <= 0)

    def test_zero_spread_uses_unit_scale(self):
        """Identical finite distances fall back to scale one"""
        samples = [_sample((Segment.TOP, 0.7), index=i) for i in range(3)]
        assert gap_statistics(samples, Z0).scale == 1.0

    def test_needs_two_samples(self):
        """One sample gives no statistics"""
        with pytest.raises(ValueError):
            gap_statistics(SAMPLES[:1], Z0)

    def test_record(self):
        """Record carries z0, counts and the curve rows"""
        record = gap_statistics(SAMPLES, Z0, curve_points=10).to_record()
        assert record["z0"] == [0.5, 1.0]
        assert len(record["curve"]) == 10
        assert set(record["curve"][0]) == {"scaled_distance", "complement_ecdf", "n_samples", "n_infinite"}


class TestCurves:

    def test_complement_curve(self):
        """P(D > r) on a grid"""
        curve = complement_curve(np.array([0.5, 1.5, np.inf]), np.array([0.0, 1.0, 2.0]))
        np.testing.assert_allclose(curve, [1.0, 2.0 / 3.0, 1.0 / 3.0])

    def test_curve_distance_self(self):
        """A curve is at distance zero from itself"""
        stats = gap_statistics(SAMPLES, Z0)
        assert curve_distance(stats, stats) == 0.0
