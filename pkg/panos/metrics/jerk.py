# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument


def jerk_series(trace, dt):
    """Jerk magnitude of one IMU, m/s^3.

    Central differences per axis with both endpoints dropped.

    Args:
        trace (ndarray): (n, 3) accelerations m/s^2, n >= 3.
        dt (float): Uniform sample interval s.

    Returns ndarray of n - 2 values.
    """
    trace = np.asarray(trace, dtype=np.float64)
    if trace.ndim != 2 or trace.shape[1] != 3:
        raise InvalidArgument('trace must be (n, 3)')
    if len(trace) < 3:
        raise InvalidArgument('jerk needs at least 3 samples, got %s' %
                              len(trace))
    if not dt > 0:
        raise InvalidArgument('dt must be > 0')
    derivative = (trace[2:] - trace[:-2]) / (2.0 * dt)
    return np.sqrt((derivative ** 2).sum(axis=1))


def mean_jerk(traces, dt):
    """Overall and per-IMU mean jerk.

    Args:
        traces (list): Five (n, 3) traces of equal length.
        dt (float): Sample interval s.

    Returns tuple (overall mean, ndarray of 5 per-IMU means).
    """
    if len(traces) != 5:
        raise InvalidArgument('expected 5 IMU traces, got %s' % len(traces))
    if len(set(len(trace) for trace in traces)) != 1:
        raise InvalidArgument('IMU traces must have equal length')
    per_imu = np.array([jerk_series(trace, dt).mean() for trace in traces])
    return float(per_imu.mean()), per_imu


def improvement(baseline, panos):
    """Percentage jerk improvement over a baseline.

    >>> round(improvement(546.95, 386.44), 2)
    29.35
    """
    if baseline == 0:
        raise InvalidArgument('baseline mean jerk must be non-zero')
    if not baseline > 0:
        raise InvalidArgument('baseline mean jerk must be > 0')
    return 100.0 * (baseline - panos) / baseline
