# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import csv

from panos.core.exceptions import InvalidArgument
from panos.metrics.jerk import mean_jerk
from panos.metrics.vibration import vibration_cost
from panos.sim import constants as C
from panos.utils.formatting import format_float

JERK_COLUMNS = tuple('jerk_%s' % imu_id for imu_id in C.IMU_IDS)

REPORT_HEADER = (('controller', 'terrain', 'payload', 'seed') +
                 JERK_COLUMNS + ('mean_jerk', 'vibration_cost_cm',
                                 'mean_command', 'improvement_pct'))


class StabilityReport(object):
    """Per-IMU and overall mean jerk plus vibration cost of a trial.

    Args:
        per_imu (sequence): Five mean jerks for FR, FL, HR, HL, C (m/s^3).
        mean_jerk (float): Overall mean jerk (m/s^3).
        vibration_cost (float): cm.
        meta (dict): controller, terrain, payload, seed and mean_command.
    """
    __slots__ = ('per_imu', 'mean_jerk', 'vibration_cost', 'meta')

    def __init__(self, per_imu, mean_jerk, vibration_cost, meta=None):
        per_imu = [float(value) for value in per_imu]
        if len(per_imu) != 5:
            raise InvalidArgument('expected 5 per-IMU jerks')
        if min(per_imu) < 0 or mean_jerk < 0:
            raise InvalidArgument('jerks must be >= 0')
        self.per_imu = per_imu
        self.mean_jerk = float(mean_jerk)
        self.vibration_cost = float(vibration_cost)
        self.meta = dict(meta or {})

    @classmethod
    def from_runlog(cls, log, **meta):
        """Metrics of a RunLog; meta defaults from the log."""
        overall, per_imu = mean_jerk([log.imu_trace(imu_id)
                                      for imu_id in C.IMU_IDS], log.dt)
        info = {'payload': log.payload_mass,
                'seed': log.seed,
                'mean_command': float(log.commanded.mean())}
        trial = log.meta.get('trial', {})
        if 'controller' in trial:
            info['controller'] = trial['controller']
        if 'terrain' in trial:
            info['terrain'] = trial['terrain']
        info.update(meta)
        return cls(per_imu, overall, vibration_cost(log), info)

    def jerk(self, imu_id):
        return self.per_imu[C.IMU_IDS.index(imu_id)]

    def row(self, improvement=None):
        meta = self.meta
        return ([meta.get('controller', ''),
                 meta.get('terrain', ''),
                 format_float(meta.get('payload', 0.0), 2),
                 meta.get('seed', '')] +
                [format_float(value, 6) for value in self.per_imu] +
                [format_float(self.mean_jerk, 6),
                 format_float(self.vibration_cost, 6),
                 format_float(meta.get('mean_command', 0.0), 6),
                 '' if improvement is None else format_float(improvement,
                                                             4)])


def write_reports(reports, path, improvements=None):
    """StabilityReport rows as CSV, in the given order. Returns path.

    Args:
        reports (list): StabilityReport.
        improvements (list): Improvement percentage per report, None for
            no value (optional).
    """
    if improvements is None:
        improvements = [None] * len(reports)
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(REPORT_HEADER)
        for report, improvement in zip(reports, improvements):
            writer.writerow(report.row(improvement))
    return path


def read_reports(path):
    """Rows of a report CSV as list of dict (strings)."""
    with open(path, newline='') as f:
        return list(csv.DictReader(f))
