# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.commands.base import Command, world_settings
from panos.control.trial import trial_from_config, run_trial
from panos.core.logger import GetLogger
from panos.metrics.report import StabilityReport, write_reports
from panos.sim.runlog import write_runlog, frames_path

log = GetLogger(__name__)

RUNLOG = 'trial.jsonl'
REPORT = 'report.csv'

SECTIONS = ('world', 'network', 'control', 'trial')


def evaluate(config, out, checkpoint=None, seed=None):
    """Single closed-loop trial from the [trial] section.

    Writes the trial RunLog and a one row StabilityReport CSV.

    Returns StabilityReport.
    """
    dt, frame_rate = world_settings(config)
    spec = trial_from_config(config, checkpoint, seed)

    with Command('eval', config, out, SECTIONS) as command:
        manifest = command.manifest
        if checkpoint is not None:
            manifest.add_input(checkpoint)
        manifest.seed('trial', spec.seed)

        runlog = run_trial(spec, dt, frame_rate)
        runlog_path = command.path(RUNLOG)
        manifest.add_output(frames_path(runlog_path))
        write_runlog(runlog, runlog_path)

        info = spec.describe()
        report = StabilityReport.from_runlog(runlog,
                                             controller=info['controller'],
                                             terrain=info['terrain'])
        write_reports([report], command.path(REPORT))
        log.info('Trial mean jerk %.3f m/s^3, vibration cost %.3f cm' % (
            report.mean_jerk, report.vibration_cost))
    return report
