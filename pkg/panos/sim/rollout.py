# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.logger import GetLogger
from panos.core.exceptions import InvalidArgument
from panos.sim import constants as C
from panos.sim.render import render_observation
from panos.sim.terrain import as_course
from panos.sim.world import D_P, SimState, ImuSample, step
from panos.utils.timer import Timer

log = GetLogger(__name__)


class RunLog(object):
    """Closed or open loop trial record.

    Per-step quantities are stored as arrays with the step index first.

    Attributes:
        course (TerrainCourse): Terrain walked.
        payload_mass (float): kg.
        dt (float): Step seconds.
        seed (int): Simulator seed, also the run id.
        frame_rate (float): Observation frames per second.
        commanded (ndarray): (N,) commanded m/s.
        achieved (ndarray): (N,) achieved m/s.
        proprio (ndarray): (N, 60) flattened ProprioState.
        slips (ndarray): (N, 4) per-foot slip.
        imu (ndarray): (N, 5, 3) accelerations for FR, FL, HR, HL, C.
        timestamps (ndarray): (N,) sample times, strictly increasing.
        frame_index (ndarray): (N,) frame observed at each step.
        frames (ndarray): (F, 64, 64, 3) float32 observations.
        meta (dict): Free form description (profile, controller).
    """
    __slots__ = ('course', 'payload_mass', 'dt', 'seed', 'frame_rate',
                 'commanded', 'achieved', 'proprio', 'slips', 'imu',
                 'timestamps', 'frame_index', 'frames', 'meta')

    def __init__(self, course, payload_mass, dt, seed, frame_rate,
                 commanded, achieved, proprio, slips, imu, timestamps,
                 frame_index, frames, meta=None):
        if dt <= 0:
            raise InvalidArgument('dt must be > 0')
        n = len(commanded)
        for name, values in (('achieved', achieved), ('proprio', proprio),
                             ('slips', slips), ('imu', imu),
                             ('timestamps', timestamps),
                             ('frame_index', frame_index)):
            if len(values) != n:
                raise InvalidArgument('%s has %s steps, expected %s' % (
                    name, len(values), n))
        self.course = as_course(course)
        self.payload_mass = float(payload_mass)
        self.dt = float(dt)
        self.seed = int(seed)
        self.frame_rate = float(frame_rate)
        self.commanded = np.asarray(commanded, dtype=np.float64)
        self.achieved = np.asarray(achieved, dtype=np.float64)
        self.proprio = np.asarray(proprio, dtype=np.float64).reshape(n, D_P)
        self.slips = np.asarray(slips, dtype=np.float64).reshape(n, 4)
        self.imu = np.asarray(imu, dtype=np.float64).reshape(n, 5, 3)
        self.timestamps = np.asarray(timestamps, dtype=np.float64)
        self.frame_index = np.asarray(frame_index, dtype=np.int64)
        self.frames = np.asarray(frames, dtype=np.float32)
        self.meta = dict(meta or {})

    @property
    def terrain(self):
        return self.course.first

    @property
    def run_id(self):
        return self.seed

    @property
    def duration(self):
        return len(self) * self.dt

    def __len__(self):
        return len(self.commanded)

    def imu_samples(self, index):
        return [ImuSample(imu_id, self.imu[index, k], self.timestamps[index])
                for k, imu_id in enumerate(C.IMU_IDS)]

    def imu_trace(self, imu_id):
        """(N, 3) acceleration samples of one IMU."""
        return self.imu[:, C.IMU_IDS.index(imu_id), :]

    def frame(self, index):
        """Observation frame seen at step index."""
        return self.frames[self.frame_index[index]]

    def __eq__(self, other):
        if not isinstance(other, RunLog):
            return False
        return (self.course == other.course and
                self.payload_mass == other.payload_mass and
                self.dt == other.dt and
                self.seed == other.seed and
                self.frame_rate == other.frame_rate and
                self.meta == other.meta and
                all(np.array_equal(getattr(self, name), getattr(other, name))
                    for name in ('commanded', 'achieved', 'proprio', 'slips',
                                 'imu', 'timestamps', 'frame_index',
                                 'frames')))


def steps_per_frame(dt, frame_rate):
    ratio = 1.0 / (frame_rate * dt)
    steps = int(round(ratio))
    if steps < 1 or abs(ratio - steps) > 1e-9:
        raise InvalidArgument('frame interval must be a multiple of dt')
    return steps


class Recorder(object):
    """Accumulates steps of a trial into a RunLog.

    Renders an observation every ``steps_per_frame`` steps at the position
    the robot has reached before stepping.
    """
    def __init__(self, state, dt, frame_rate, steps):
        self.state = state
        self.dt = dt
        self.frame_rate = frame_rate
        self.every = steps_per_frame(dt, frame_rate)
        self.index = 0
        self._rendered = -1
        self.commanded = np.empty(steps)
        self.achieved = np.empty(steps)
        self.proprio = np.empty((steps, D_P))
        self.slips = np.empty((steps, 4))
        self.imu = np.empty((steps, 5, 3))
        self.timestamps = np.empty(steps)
        self.frame_index = np.empty(steps, dtype=np.int64)
        self.frames = []

    def observe(self):
        """Frame for the current step, rendering one when due."""
        if self.index % self.every == 0 and self._rendered != self.index:
            self._rendered = self.index
            self.frames.append(render_observation(self.state.course,
                                                  self.state.position))
        return self.frames[-1]

    def step(self, v_cmd, payload_mass):
        self.observe()
        i = self.index
        _, proprio, imus, achieved = step(self.state, v_cmd, payload_mass,
                                          self.dt)
        self.commanded[i] = v_cmd
        self.achieved[i] = achieved
        self.proprio[i] = proprio.flatten()
        self.slips[i] = proprio.foot_slip
        self.imu[i] = np.stack([sample.accel for sample in imus])
        # Integer step count keeps timestamps free of accumulated rounding.
        self.timestamps[i] = (i + 1) * self.dt
        self.frame_index[i] = len(self.frames) - 1
        self.index += 1
        return proprio, achieved

    def runlog(self, payload_mass, seed, meta=None):
        n = self.index
        frames = (np.stack(self.frames) if self.frames else
                  np.zeros((0, C.IMAGE_SIZE, C.IMAGE_SIZE, 3), np.float32))
        return RunLog(self.state.course, payload_mass, self.dt, seed,
                      self.frame_rate, self.commanded[:n], self.achieved[:n],
                      self.proprio[:n], self.slips[:n], self.imu[:n],
                      self.timestamps[:n], self.frame_index[:n], frames,
                      meta)


def step_count(duration, dt):
    if not duration > 0:
        raise InvalidArgument('duration must be > 0, got %s' % duration)
    return int(round(duration / dt))


def rollout(terrain, velocity_profile, payload_mass, duration, seed,
            dt=C.DT, frame_rate=C.FRAME_RATE):
    """Open loop traversal following a velocity profile.

    Args:
        terrain (TerrainSpec/TerrainCourse): Surface to walk.
        velocity_profile (callable): t seconds -> commanded m/s.
        payload_mass (float): kg.
        duration (float): seconds, > 0.
        seed (int): Simulator seed.

    Returns RunLog with round(duration / dt) steps.
    """
    steps = step_count(duration, dt)
    recorder = Recorder(SimState(terrain, seed), dt, frame_rate, steps)

    with Timer() as elapsed:
        for i in range(steps):
            recorder.step(velocity_profile(i * dt), payload_mass)

    meta = {}
    if hasattr(velocity_profile, 'describe'):
        meta['profile'] = velocity_profile.describe()

    log.debug('Rollout %s payload=%skg seed=%s steps=%s' % (
        recorder.state.course.first.name, payload_mass, seed, steps),
        timer=elapsed())

    return recorder.runlog(payload_mass, seed, meta)
