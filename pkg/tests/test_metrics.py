# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np
import pytest
from pytest import raises

from panos.control import FixedVelocity, TrialSpec, run_trial
from panos.core.exceptions import InvalidArgument
from panos.metrics import (jerk_series, mean_jerk, improvement,
                           hip_offset_cost, vibration_cost, pca_report,
                           StabilityReport, write_reports, read_reports,
                           REPORT_HEADER)
from panos.sim import constants as C
from panos.sim.terrain import make_terrain
from panos.sim.world import HIP_POSITION

parametrize = pytest.mark.parametrize


def ramp(slopes, n=100, dt=0.01):
    t = np.arange(n)[:, None] * dt
    return np.asarray(slopes, dtype=np.float64)[None, :] * t


def jerk_loop(trace, dt):
    values = []
    for i in range(1, len(trace) - 1):
        total = 0.0
        for axis in range(3):
            total += ((trace[i + 1][axis] - trace[i - 1][axis]) /
                      (2 * dt)) ** 2
        values.append(total ** 0.5)
    return values


@pytest.fixture(scope='module')
def trial_log():
    spec = TrialSpec(FixedVelocity(2.0), make_terrain('Gravel', 1), 6.8,
                     5.0, 101)
    return run_trial(spec)


class TestJerk(object):
    def test_constant(self):
        trace = np.tile([0.1, -0.2, 9.81], (50, 1))
        assert not jerk_series(trace, 0.01).any()

    @parametrize('slopes,expected', (((3.0, 0.0, 0.0), 3.0),
                                     ((3.0, 4.0, 0.0), 5.0),
                                     ((0.0, 0.0, -2.0), 2.0)))
    def test_ramps(self, slopes, expected):
        series = jerk_series(ramp(slopes), 0.01)
        assert len(series) == 98
        assert np.allclose(series, expected, rtol=1e-9)

    def test_oracle(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            n = int(rng.integers(3, 60))
            dt = float(rng.uniform(0.001, 0.1))
            trace = rng.normal(0, 5, (n, 3))
            assert np.allclose(jerk_series(trace, dt), jerk_loop(trace, dt),
                               rtol=1e-12, atol=1e-12)

    def test_invariances(self):
        rng = np.random.default_rng(1)
        trace = rng.normal(0, 1, (40, 3))
        base = jerk_series(trace, 0.01)
        assert np.allclose(jerk_series(trace + [1.0, -3.0, 9.81], 0.01), base)
        assert np.allclose(jerk_series(2.5 * trace, 0.01), 2.5 * base)
        assert np.allclose(jerk_series(trace[::-1], 0.01), base[::-1])

    def test_too_short(self):
        with raises(InvalidArgument):
            jerk_series(np.zeros((2, 3)), 0.01)
        with raises(InvalidArgument):
            jerk_series(np.zeros((10, 2)), 0.01)
        with raises(InvalidArgument):
            jerk_series(np.zeros((10, 3)), 0.0)

    def test_mean(self):
        traces = [ramp((10.0, 0, 0))] * 4 + [ramp((60.0, 0, 0))]
        overall, per_imu = mean_jerk(traces, 0.01)
        assert overall == pytest.approx(20.0)
        assert np.allclose(per_imu, [10, 10, 10, 10, 60])

    def test_mean_order(self):
        rng = np.random.default_rng(2)
        traces = [rng.normal(0, 1, (30, 3)) for _ in range(5)]
        overall, _ = mean_jerk(traces, 0.01)
        assert mean_jerk(traces[::-1], 0.01)[0] == pytest.approx(overall)

    def test_mean_shape(self):
        with raises(InvalidArgument):
            mean_jerk([np.zeros((10, 3))] * 4, 0.01)
        with raises(InvalidArgument):
            mean_jerk([np.zeros((10, 3))] * 4 + [np.zeros((11, 3))], 0.01)

    @parametrize('baseline,panos,expected', ((546.95, 386.44, 29.35),
                                             (836.44, 365.17, 56.34)))
    def test_improvement(self, baseline, panos, expected):
        assert round(improvement(baseline, panos), 2) == \
            pytest.approx(expected, abs=1e-9)

    def test_improvement_zero_baseline(self):
        with raises(InvalidArgument):
            improvement(0.0, 1.0)


class TestVibration(object):
    def test_nominal(self):
        assert hip_offset_cost(np.tile(C.HIP_NOMINAL, (20, 1))) == 0.0

    def test_constant_offset(self):
        hips = np.tile(C.HIP_NOMINAL + 0.02, (20, 1))
        assert hip_offset_cost(hips) == pytest.approx(0.7)

    def test_reversal(self):
        hips = np.random.default_rng(3).normal(0, 0.1, (50, 4))
        assert hip_offset_cost(hips[::-1]) == pytest.approx(
            hip_offset_cost(hips))

    def test_runlog(self, trial_log):
        assert vibration_cost(trial_log) == hip_offset_cost(
            trial_log.proprio[:, HIP_POSITION])
        assert vibration_cost(trial_log) > 0

    def test_invalid(self):
        with raises(InvalidArgument):
            hip_offset_cost(np.zeros((0, 4)))
        with raises(InvalidArgument):
            hip_offset_cost(np.zeros((5, 3)))


class TestPca(object):
    def test_rank_one(self):
        rng = np.random.default_rng(4)
        column = rng.normal(0, 1, (100, 1))
        matrix = column @ rng.normal(0, 1, (1, 6))
        fractions = pca_report(matrix)
        assert fractions[0] == pytest.approx(1.0)
        assert np.allclose(fractions[1:], 0.0, atol=1e-12)

    def test_svd_oracle(self):
        rng = np.random.default_rng(5)
        matrix = rng.normal(0, 1, (200, 60)) * rng.uniform(0.1, 3, 60)
        centered = matrix - matrix.mean(axis=0)
        singular = np.linalg.svd(centered, compute_uv=False)
        expected = singular ** 2 / (singular ** 2).sum()
        fractions = pca_report(matrix)
        assert len(fractions) == 60
        assert np.allclose(fractions, expected, atol=1e-9)
        assert fractions.sum() == pytest.approx(1.0)
        assert np.all(np.diff(fractions) <= 1e-15)

    def test_centering(self):
        rng = np.random.default_rng(6)
        matrix = rng.normal(0, 1, (80, 5))
        assert np.allclose(pca_report(matrix),
                           pca_report(matrix + [1, 2, 3, 4, 5e3]))

    def test_invalid(self):
        with raises(InvalidArgument):
            pca_report(np.zeros((5, 5)))
        with raises(InvalidArgument):
            pca_report(np.ones((20, 5)))
        with raises(InvalidArgument):
            pca_report(np.zeros(20))


class TestReport(object):
    def test_from_runlog(self, trial_log):
        report = StabilityReport.from_runlog(trial_log, terrain='Gravel')
        assert report.meta['controller'] == 'fixed'
        assert report.meta['terrain'] == 'Gravel'
        assert report.meta['mean_command'] == 2.0
        assert report.mean_jerk == pytest.approx(np.mean(report.per_imu))
        assert report.jerk('C') == report.per_imu[4]
        assert report.mean_jerk > 0

    def test_csv(self, trial_log, tmp_path):
        report = StabilityReport.from_runlog(trial_log)
        path = write_reports([report, report], str(tmp_path / 'r.csv'),
                             [None, 12.5])
        rows = read_reports(path)
        assert len(rows) == 2
        assert tuple(rows[0]) == REPORT_HEADER
        assert rows[0]['improvement_pct'] == ''
        assert rows[1]['improvement_pct'] == '12.5000'
        assert float(rows[0]['mean_jerk']) == pytest.approx(
            report.mean_jerk, abs=1e-6)

    def test_invalid(self):
        with raises(InvalidArgument):
            StabilityReport([1.0] * 4, 1.0, 0.0)
        with raises(InvalidArgument):
            StabilityReport([1.0, 1.0, 1.0, 1.0, -1.0], 1.0, 0.0)
