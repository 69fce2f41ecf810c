"""Rotation-group distributions, closed forms, and inequality sweeps."""

import math

import numpy as np
import pytest

from entroineq import (
    DomainError,
    HalfInt,
    Su2Sweep,
    closed_form_check,
    column_distribution,
    su2_subadditivity,
    su2_tsallis_subadditivity,
    sweep,
)

TWO_PI = 2.0 * math.pi


class TestColumnDistribution:
    def test_zero_rotation_is_delta(self):
        p = column_distribution("3/2", "-1/2", 0.0)
        assert p.components == (0.0, 1.0, 0.0, 0.0)

    def test_spin_three_half_closed_forms(self):
        theta = 1.1
        c = math.cos(theta)
        p = column_distribution("3/2", "3/2", theta)
        expected = (
            -((c - 1.0) ** 3) / 8.0,
            3.0 * (c - 1.0) ** 2 * (c + 1.0) / 8.0,
            3.0 * math.sin(theta / 2.0) ** 2 * (math.sin(theta / 2.0) ** 2 - 1.0) ** 2,
            (c + 1.0) ** 3 / 8.0,
        )
        assert p.components == pytest.approx(expected, abs=1e-14)

    def test_spin_two_closed_forms(self):
        theta = 0.8
        c = math.cos(theta)
        ch = math.cos(theta / 2.0) ** 2
        sh = math.sin(theta / 2.0) ** 2
        p = column_distribution(2, 2, theta)
        expected = (
            (c - 1.0) ** 4 / 16.0,
            4.0 * sh**3 * (1.0 - sh),
            3.0 * math.sin(theta) ** 4 / 8.0,
            4.0 * ch**3 * (1.0 - ch),
            (c + 1.0) ** 4 / 16.0,
        )
        assert p.components == pytest.approx(expected, abs=1e-14)

    def test_normalized_across_spins(self):
        for two_j in range(1, 11):
            j = HalfInt(two_j)
            for two_m in range(-two_j, two_j + 1, 2):
                p = column_distribution(j, HalfInt(two_m), 1.7)
                assert abs(math.fsum(p.components) - 1.0) < 1e-10

    def test_invalid_column(self):
        with pytest.raises(DomainError):
            column_distribution(1, 2, 0.5)


class TestClosedFormCheck:
    def test_tight_on_both_examples(self):
        for j in ("3/2", 2):
            worst = max(
                closed_form_check(j, theta) for theta in np.linspace(0.0, TWO_PI, 64)
            )
            assert worst <= 1e-12

    def test_delta_at_zero(self):
        assert closed_form_check("3/2", 0.0) <= 1e-15

    def test_unsupported_spin(self):
        with pytest.raises(DomainError):
            closed_form_check(1, 0.5)


class TestSu2Subadditivity:
    def test_zero_rotation_slack_vanishes(self):
        assert abs(su2_subadditivity("3/2", "3/2", 0.0).slack) <= 1e-9

    def test_half_turn_equality_point(self):
        assert abs(su2_subadditivity("3/2", "3/2", math.pi).slack) <= 1e-9

    def test_quarter_turn_hand_value(self):
        report = su2_subadditivity("3/2", "3/2", math.pi / 2.0)
        assert report.slack == pytest.approx(
            0.75 * math.log(3.0) - math.log(2.0), abs=1e-12
        )
        assert report.slack > 0.01


class TestSu2Tsallis:
    def test_zero_rotation(self):
        assert abs(su2_tsallis_subadditivity(2, 2, 0.0, 2.0).slack) <= 1e-12

    def test_quarter_turn_hand_value(self):
        # distribution (1, 4, 6, 4, 1)/16; split gives exact dyadic sums
        report = su2_tsallis_subadditivity(2, 2, math.pi / 2.0, 2.0)
        assert report.h_joint == pytest.approx(0.7265625, abs=1e-13)
        assert report.h_first == pytest.approx(0.6640625, abs=1e-13)
        assert report.h_second == pytest.approx(0.4296875, abs=1e-13)
        assert report.slack == pytest.approx(0.3671875, abs=1e-13)
        assert report.slack > 0.0

    def test_limit_matches_shannon_report(self):
        theta = 1.3
        shannon_report = su2_subadditivity("3/2", "3/2", theta)
        tsallis_report = su2_tsallis_subadditivity("3/2", "3/2", theta, 1.0 + 1e-6)
        assert tsallis_report.h_joint == pytest.approx(shannon_report.h_joint, abs=1e-5)
        assert tsallis_report.h_first == pytest.approx(shannon_report.h_first, abs=1e-5)
        assert tsallis_report.h_second == pytest.approx(shannon_report.h_second, abs=1e-5)
        assert tsallis_report.slack == pytest.approx(shannon_report.slack, abs=1e-5)


class TestSweep:
    def test_preserves_grid_order(self):
        grid = tuple(np.linspace(0.0, TWO_PI, 13))
        results = sweep(Su2Sweep(j=HalfInt(3), m=HalfInt(3), theta_grid=grid))
        assert tuple(theta for theta, _ in results) == grid

    def test_single_point(self):
        results = sweep(Su2Sweep(j=HalfInt(3), m=HalfInt(3), theta_grid=(1.0,)))
        assert len(results) == 1
        assert results[0][1].slack >= -1e-12

    def test_slack_nonnegative_and_zero_only_near_roots(self):
        grid = tuple(np.linspace(0.0, TWO_PI, 256))
        for j in ("3/2", 2):
            results = sweep(Su2Sweep(j=HalfInt.coerce(j), m=HalfInt.coerce(j), theta_grid=grid))
            slacks = np.array([report.slack for _, report in results])
            assert slacks.min() >= -1e-12
            big = [
                theta
                for (theta, report) in results
                if report.slack > 1e-3
            ]
            # the bulk of the sweep sits well above zero slack
            assert len(big) > 150

    def test_tsallis_mode(self):
        results = sweep(
            Su2Sweep(j=HalfInt(4), m=HalfInt(4), theta_grid=(0.5, 1.0), q=2.0)
        )
        assert all(report.kind == "tsallis" for _, report in results)
        assert all(report.slack >= -1e-12 for _, report in results)

    def test_empty_grid_rejected(self):
        with pytest.raises(DomainError):
            Su2Sweep(j=HalfInt(3), m=HalfInt(3), theta_grid=())
