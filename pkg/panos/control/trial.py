# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.core.logger import GetLogger
from panos.core.exceptions import InvalidArgument, ConfigError
from panos.control.controllers import (ControlInput, FixedVelocity,
                                       ReactiveSlip, PanosController)
from panos.network.checkpoint import load_checkpoint
from panos.sim import constants as C
from panos.sim.rollout import Recorder, step_count
from panos.sim.terrain import (TerrainClass, make_terrain, make_course,
                               as_course)
from panos.sim.world import SimState
from panos.utils.timer import Timer

log = GetLogger(__name__)

CONTROLLERS = ('panos', 'fixed', 'reactive')

MIXED = 'Mixed'
MIXED_SEGMENT = 10.0


def trial_terrain(name, seed):
    """TerrainSpec for a class name, or a four-class course for 'Mixed'."""
    if name.strip() == MIXED:
        return make_course([c.value for c in TerrainClass], MIXED_SEGMENT,
                           seed)
    return make_terrain(name, seed)


class TrialSpec(object):
    """One closed-loop evaluation trial.

    Args:
        controller (object): FixedVelocity, ReactiveSlip or PanosController.
        terrain (TerrainSpec/TerrainCourse): Surface.
        payload_mass (float): kg.
        duration (float): seconds, > 0.
        seed (int): Simulator seed.
        control_rate (float): Controller Hz; 1/dt must be a multiple.
        window (float): Seconds of proprioception the controller sees.
    """
    __slots__ = ('controller', 'terrain', 'payload_mass', 'duration', 'seed',
                 'control_rate', 'window')

    def __init__(self, controller, terrain, payload_mass, duration, seed,
                 control_rate=5.0, window=1.0):
        if not duration > 0:
            raise InvalidArgument('duration must be > 0')
        if not payload_mass >= 0:
            raise InvalidArgument('payload_mass must be >= 0')
        if not control_rate > 0 or not window > 0:
            raise InvalidArgument('control_rate and window must be > 0')
        self.controller = controller
        self.terrain = as_course(terrain)
        self.payload_mass = float(payload_mass)
        self.duration = float(duration)
        self.seed = int(seed)
        self.control_rate = float(control_rate)
        self.window = float(window)

    def describe(self):
        info = dict(self.controller.describe())
        info.update({'terrain': self.terrain.first.name
                     if len(self.terrain.segments) == 1 else MIXED,
                     'payload_mass': self.payload_mass,
                     'duration': self.duration,
                     'seed': self.seed,
                     'control_rate': self.control_rate})
        return info


def control_steps(control_rate, dt):
    ratio = 1.0 / (control_rate * dt)
    steps = int(round(ratio))
    if steps < 1 or abs(ratio - steps) > 1e-9:
        raise InvalidArgument('control rate %sHz does not divide %sHz' % (
            control_rate, 1.0 / dt))
    return steps


def make_controller(name, config, params=None, checkpoint=None):
    """Controller by name using the [control] section."""
    v_min = config.getnonneg('control', 'v_min')
    v_max = config.getpositive('control', 'v_max')
    v_init = config.getpositive('control', 'v_init')
    if name == 'fixed':
        return FixedVelocity(config.getnonneg('control', 'fixed_velocity'),
                             v_min, v_max)
    elif name == 'reactive':
        return ReactiveSlip(config.getpositive('control', 'reactive_gain'),
                            v_min, v_max, v_init)
    elif name == 'panos':
        if params is None:
            if checkpoint is None:
                raise InvalidArgument('panos controller needs a checkpoint')
            params = load_checkpoint(checkpoint, config.digest('network'))
        return PanosController(params, checkpoint, v_min, v_max, v_init)
    raise InvalidArgument("Unknown controller '%s' (expected %s)" % (
        name, ', '.join(CONTROLLERS)))


def trial_from_config(config, checkpoint=None, seed=None, params=None):
    """TrialSpec from the [trial] and [control] sections."""
    name = config.getchoice('trial', 'controller', CONTROLLERS)
    terrain_name = config.get('trial', 'terrain').strip()
    if seed is None:
        seed = config.getseed('trial', 'seed')
    try:
        terrain = trial_terrain(terrain_name, seed)
    except InvalidArgument as e:
        raise ConfigError('trial.terrain', str(e)) from None
    return TrialSpec(make_controller(name, config, params, checkpoint),
                     terrain,
                     config.getnonneg('trial', 'payload'),
                     config.getpositive('trial', 'duration'),
                     seed,
                     config.getpositive('control', 'control_rate'),
                     config.getpositive('control', 'window'))


def run_trial(spec, dt=C.DT, frame_rate=C.FRAME_RATE):
    """Closed-loop trial.

    The controller runs at spec.control_rate; the simulator at 1/dt holds
    the last command in between.

    Returns RunLog.
    """
    steps = step_count(spec.duration, dt)
    every = control_steps(spec.control_rate, dt)
    history = max(1, int(round(spec.window / dt)))
    recorder = Recorder(SimState(spec.terrain, spec.seed), dt, frame_rate,
                        steps)
    controller = spec.controller

    v_cmd = controller.v_init
    with Timer() as elapsed:
        for i in range(steps):
            if i > 0 and i % every == 0:
                lo = max(0, i - history)
                v_cmd = controller(ControlInput(recorder.observe(),
                                                recorder.proprio[lo:i],
                                                recorder.slips[lo:i],
                                                v_cmd))
            recorder.step(v_cmd, spec.payload_mass)

    log.info('Trial %s on %s payload=%skg seed=%s' % (
        controller.name, spec.describe()['terrain'], spec.payload_mass,
        spec.seed), timer=elapsed())

    return recorder.runlog(spec.payload_mass, spec.seed,
                           {'trial': spec.describe()})
