# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os
import csv

import numpy as np

from panos.commands.base import Command, world_settings
from panos.core.exceptions import (ConfigError, InvalidArgument,
                                   ValidationError)
from panos.core.logger import GetLogger
from panos.dataset.storage import read_dataset, MAGIC
from panos.helpers.charts import write_bar_chart
from panos.metrics.pca import pca_report as explained_variance
from panos.sim.profiles import SegmentProfile
from panos.sim.rollout import rollout
from panos.sim.runlog import read_runlog
from panos.sim.terrain import make_terrain
from panos.utils.formatting import format_float

log = GetLogger(__name__)

VARIANCE = 'pca.csv'
CHART = 'pca.svg'

GROUPINGS = ('payload', 'terrain', 'file')

SECTIONS = ('world', 'collect', 'pca')


def _is_dataset(path):
    with open(path, 'rb') as f:
        return f.read(len(MAGIC)) == MAGIC


def load_groups(paths, group_by):
    """Proprio matrices grouped from runlog and dataset files.

    Runlogs group by payload, terrain or file. Datasets carry neither, so
    each dataset file is its own group.

    Returns dict label -> list of (n, d_P) arrays, in first-seen order.
    """
    groups = {}
    for path in paths:
        if _is_dataset(path):
            if group_by != 'file':
                log.warning("Dataset '%s' grouped by file" % path)
            rows = np.stack([s.proprio for s in read_dataset(path)])
            label = os.path.basename(path)
        else:
            runlog = read_runlog(path)
            rows = runlog.proprio
            if group_by == 'payload':
                label = '%gkg' % runlog.payload_mass
            elif group_by == 'terrain':
                label = runlog.terrain.name
            else:
                label = os.path.basename(path)
        groups.setdefault(label, []).append(rows)
    return groups


def simulate_groups(config, seed=None):
    """One rollout per pca.payloads on pca.terrain, grouped by payload."""
    dt, frame_rate = world_settings(config)
    terrain_name = config.get('pca', 'terrain').strip()
    terrain_seed = config.getseed('pca', 'seed') if seed is None else seed
    try:
        terrain = make_terrain(terrain_name, terrain_seed)
    except InvalidArgument as e:
        raise ConfigError('pca.terrain', str(e)) from None
    duration = config.getpositive('pca', 'duration')
    segment = config.getpositive('collect', 'segment')
    v_low = config.getnonneg('collect', 'v_low')
    v_high = config.getpositive('collect', 'v_high')
    groups = {}
    for payload in config.getfloatlist('pca', 'payloads'):
        profile = SegmentProfile(duration, terrain_seed, segment, v_low,
                                 v_high)
        runlog = rollout(terrain, profile, payload, duration, terrain_seed,
                         dt, frame_rate)
        groups.setdefault('%gkg' % payload, []).append(runlog.proprio)
    return groups


def write_variance(fractions, path):
    """CSV of component index and one fraction column per group."""
    labels = list(fractions)
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['component'] + labels)
        for k in range(len(fractions[labels[0]])):
            writer.writerow([k + 1] + [format_float(fractions[label][k], 12)
                                       for label in labels])
    return path


def pca_report(config, out, paths=None, seed=None):
    """Explained variance of proprioception per group.

    Without input paths the groups are simulated from the [pca] section.

    Args:
        config (Config): Loaded configuration.
        out (str): Output directory.
        paths (list): Runlog or dataset files (optional).
        seed (int): Overrides pca.seed for simulated groups (optional).

    Returns dict label -> explained variance fractions.
    """
    group_by = config.getchoice('pca', 'group_by', GROUPINGS)
    components = config.getcount('pca', 'components')

    with Command('pca-report', config, out, SECTIONS) as command:
        manifest = command.manifest
        if paths:
            for path in paths:
                manifest.add_input(path)
            groups = load_groups(paths, group_by)
        else:
            manifest.seed('pca', config.getseed('pca', 'seed')
                          if seed is None else seed)
            groups = simulate_groups(config, seed)

        if len(groups) < 2:
            raise ValidationError('PCA report needs at least 2 groups, got'
                                  ' %s (%s)' % (len(groups),
                                                ', '.join(groups)))

        fractions = {}
        for label, blocks in groups.items():
            fractions[label] = explained_variance(np.concatenate(blocks))
            log.info('Group %s: top component explains %.2f%%' % (
                label, 100.0 * fractions[label][0]))

        write_variance(fractions, command.path(VARIANCE))
        shown = min(components, len(next(iter(fractions.values()))))
        write_bar_chart(command.path(CHART),
                        'Explained variance by component',
                        ['PC%s' % (k + 1) for k in range(shown)],
                        list(fractions),
                        [list(values[:shown]) for values in
                         fractions.values()],
                        'fraction')
        manifest.extra['groups'] = list(fractions)
        manifest.extra['top_component'] = {label: float(values[0])
                                           for label, values
                                           in fractions.items()}
    return fractions
