# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.commands.base import Command, world_settings
from panos.core.exceptions import ConfigError, InvalidArgument
from panos.core.logger import GetLogger
from panos.dataset.sequence import form_sequences
from panos.dataset.storage import write_dataset
from panos.sim.profiles import SegmentProfile
from panos.sim.rollout import rollout
from panos.sim.runlog import write_runlog, frames_path
from panos.sim.terrain import make_terrain

log = GetLogger(__name__)

DATASET = 'dataset.pnsd'

SECTIONS = ('world', 'collect')


class CollectPlan(object):
    """Validated [collect] settings."""
    def __init__(self, config, seed=None):
        self.dt, self.frame_rate = world_settings(config)
        self.terrains = config.getlist('collect', 'terrains')
        try:
            self.terrains = [make_terrain(name, 0).name
                             for name in self.terrains]
        except InvalidArgument as e:
            raise ConfigError('collect.terrains', str(e)) from None
        if not self.terrains:
            raise ConfigError('collect.terrains', 'expected at least one')
        self.payloads = config.getfloatlist('collect', 'payloads')
        self.profiles = config.getcount('collect', 'profiles')
        self.duration = config.getpositive('collect', 'duration')
        self.segment = config.getpositive('collect', 'segment')
        self.v_low = config.getnonneg('collect', 'v_low')
        self.v_high = config.getpositive('collect', 'v_high')
        if self.v_high < self.v_low:
            raise ConfigError('collect.v_high', 'expected >= collect.v_low')
        self.window = config.getpositive('collect', 'window')
        frames = self.window * self.frame_rate
        if round(frames) < 1 or abs(frames - round(frames)) > 1e-9:
            raise ConfigError('collect.window', 'expected a multiple of the'
                              ' frame interval')
        self.seed = (config.getseed('collect', 'seed')
                     if seed is None else seed)
        try:
            self.save_runlogs = config.getboolean('collect', 'save_runlogs')
        except ValueError:
            raise ConfigError('collect.save_runlogs',
                              'expected true or false') from None

    def rollouts(self):
        """(terrain index, terrain name, payload, rollout seed) in order."""
        index = 0
        for t, name in enumerate(self.terrains):
            for payload in self.payloads:
                for _ in range(self.profiles):
                    yield t, name, payload, self.seed * 100000 + index
                    index += 1


def collect(config, out, seed=None):
    """Run data collection rollouts and write the dataset.

    Args:
        config (Config): Loaded configuration.
        out (str): Output directory.
        seed (int): Overrides collect.seed (optional).

    Returns path of the dataset.
    """
    plan = CollectPlan(config, seed)
    with Command('collect', config, out, SECTIONS) as command:
        manifest = command.manifest
        manifest.seed('collect', plan.seed)
        sequences = []
        rollouts = []
        for t, name, payload, run_seed in plan.rollouts():
            terrain = make_terrain(name, plan.seed * 100 + t)
            profile = SegmentProfile(plan.duration, run_seed, plan.segment,
                                     plan.v_low, plan.v_high)
            runlog = rollout(terrain, profile, payload, plan.duration,
                             run_seed, plan.dt, plan.frame_rate)
            formed = form_sequences(runlog, plan.window)
            sequences += formed
            rollouts.append({'terrain': name,
                             'visual_seed': terrain.visual_seed,
                             'payload': payload,
                             'seed': run_seed,
                             'sequences': len(formed)})
            if plan.save_runlogs:
                runlog_path = command.path('runlogs',
                                           'run-%d.jsonl' % run_seed)
                manifest.add_output(frames_path(runlog_path))
                write_runlog(runlog, runlog_path)
            log.info('Rollout %s payload=%skg seed=%s: %s sequences' % (
                name, payload, run_seed, len(formed)))

        manifest.seed('rollouts', [item['seed'] for item in rollouts])
        manifest.extra['rollouts'] = rollouts
        manifest.extra['sequences'] = len(sequences)
        path = write_dataset(sequences, command.path(DATASET))
        log.info('Collected %s sequences from %s rollouts' % (
            len(sequences), len(rollouts)))
    return path
