# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import csv

import numpy as np

from panos.commands.base import Command, world_settings
from panos.control.trial import (CONTROLLERS, TrialSpec, make_controller,
                                 trial_terrain, run_trial)
from panos.core.exceptions import ConfigError, Error, InvalidArgument
from panos.core.logger import GetLogger
from panos.helpers.charts import write_bar_chart
from panos.metrics.jerk import improvement
from panos.metrics.report import StabilityReport, write_reports
from panos.network.checkpoint import load_checkpoint
from panos.utils.formatting import format_float

log = GetLogger(__name__)

REPORT = 'report.csv'
SUMMARY = 'summary.csv'
JERK_CHART = 'mean_jerk.svg'
COST_CHART = 'vibration_cost.svg'

BASELINE = 'fixed'

SUMMARY_HEADER = ('controller', 'payload', 'mean_jerk', 'vibration_cost_cm',
                  'mean_improvement_pct', 'max_improvement_pct')

SECTIONS = ('world', 'network', 'control', 'compare')


class TrialMatrix(object):
    """Validated [compare] settings.

    Cells iterate controllers, then terrains, payloads and seeds.
    """
    def __init__(self, config):
        self.controllers = config.getlist('compare', 'controllers')
        for name in self.controllers:
            if name not in CONTROLLERS:
                raise ConfigError('compare.controllers',
                                  "unknown controller '%s'" % name)
        self.terrains = config.getlist('compare', 'terrains')
        for name in self.terrains:
            try:
                trial_terrain(name, 0)
            except InvalidArgument as e:
                raise ConfigError('compare.terrains', str(e)) from None
        self.payloads = config.getfloatlist('compare', 'payloads')
        self.seeds = config.getintlist('compare', 'seeds')
        self.duration = config.getpositive('compare', 'duration')
        if not (self.controllers and self.terrains):
            raise ConfigError('compare.controllers',
                              'expected controllers and terrains')

    def cells(self):
        for controller in self.controllers:
            for terrain in self.terrains:
                for payload in self.payloads:
                    for seed in self.seeds:
                        yield controller, terrain, payload, seed

    def __len__(self):
        return (len(self.controllers) * len(self.terrains) *
                len(self.payloads) * len(self.seeds))


def _key(report):
    meta = report.meta
    return meta['terrain'], meta['payload'], meta['seed']


def improvements(reports):
    """Improvement of each report over the fixed baseline in its cell."""
    baseline = {_key(report): report.mean_jerk for report in reports
                if report.meta['controller'] == BASELINE}
    values = []
    for report in reports:
        base = baseline.get(_key(report))
        values.append(None if base is None
                      else improvement(base, report.mean_jerk))
    return values


def seed_means(reports, attribute):
    """{(controller, terrain, payload): mean over seeds}."""
    table = {}
    for report in reports:
        meta = report.meta
        key = (meta['controller'], meta['terrain'], meta['payload'])
        table.setdefault(key, []).append(getattr(report, attribute))
    return {key: float(np.mean(values)) for key, values in table.items()}


def write_summary(reports, matrix, path):
    """Per (controller, payload) means and improvement over terrains."""
    jerks = seed_means(reports, 'mean_jerk')
    costs = seed_means(reports, 'vibration_cost')
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(SUMMARY_HEADER)
        for controller in matrix.controllers:
            for payload in matrix.payloads:
                cells = [(controller, terrain, payload)
                         for terrain in matrix.terrains]
                gains = []
                if BASELINE in matrix.controllers:
                    gains = [improvement(jerks[(BASELINE,) + cell[1:]],
                                         jerks[cell]) for cell in cells]
                writer.writerow(
                    [controller, format_float(payload, 2),
                     format_float(np.mean([jerks[c] for c in cells]), 6),
                     format_float(np.mean([costs[c] for c in cells]), 6),
                     format_float(np.mean(gains), 4) if gains else '',
                     format_float(max(gains), 4) if gains else ''])
    return path


def _chart(reports, matrix, attribute, title, y_label, path):
    table = seed_means(reports, attribute)
    groups = ['%s %gkg' % (terrain, payload)
              for terrain in matrix.terrains
              for payload in matrix.payloads]
    values = [[table[(controller, terrain, payload)]
               for terrain in matrix.terrains
               for payload in matrix.payloads]
              for controller in matrix.controllers]
    return write_bar_chart(path, title, groups, matrix.controllers, values,
                           y_label)


def compare(config, out, checkpoint=None):
    """Run the controller x terrain x payload x seed trial matrix.

    Args:
        config (Config): Loaded configuration.
        out (str): Output directory.
        checkpoint (str): Model for the panos controller.

    Returns path of the report CSV.
    """
    dt, frame_rate = world_settings(config)
    matrix = TrialMatrix(config)
    control_rate = config.getpositive('control', 'control_rate')
    window = config.getpositive('control', 'window')

    params = None
    if 'panos' in matrix.controllers:
        if checkpoint is None:
            cell = next(c for c in matrix.cells() if c[0] == 'panos')
            raise Error('Trial cell (controller=%s, terrain=%s, payload=%s,'
                        ' seed=%s): no checkpoint given' % cell)
        params = load_checkpoint(checkpoint, config.digest('network'))

    with Command('compare', config, out, SECTIONS) as command:
        manifest = command.manifest
        if checkpoint is not None:
            manifest.add_input(checkpoint)
        manifest.seed('trials', matrix.seeds)

        reports = []
        for index, (name, terrain, payload, seed) in enumerate(
                matrix.cells()):
            controller = make_controller(name, config, params, checkpoint)
            spec = TrialSpec(controller, trial_terrain(terrain, seed),
                             payload, matrix.duration, seed, control_rate,
                             window)
            runlog = run_trial(spec, dt, frame_rate)
            reports.append(StabilityReport.from_runlog(
                runlog, controller=name, terrain=terrain, payload=payload,
                seed=seed))
            log.info('Cell %s/%s %s %s %skg seed %s: mean jerk %.3f' % (
                index + 1, len(matrix), name, terrain, payload, seed,
                reports[-1].mean_jerk))

        path = write_reports(reports, command.path(REPORT),
                             improvements(reports))
        write_summary(reports, matrix, command.path(SUMMARY))
        _chart(reports, matrix, 'mean_jerk', 'Mean jerk', 'm/s^3',
               command.path(JERK_CHART))
        _chart(reports, matrix, 'vibration_cost', 'Vibration cost', 'cm',
               command.path(COST_CHART))
        manifest.extra['cells'] = len(reports)
    return path
