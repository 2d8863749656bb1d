# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Kinematic-phenomenological quadruped traversal.

Not a rigid-body simulation: gait, slip, joint loads and body vibration are
closed-form functions of the command, the terrain under the robot and the
payload, plus seeded noise. Slip grows with v_cmd**2, (1 - friction),
payload and roughness. Vibration and impacts grow with v_cmd, roughness and
payload.
"""
import numpy as np

from panos.core.exceptions import InvalidArgument, SimulatorDivergence
from panos.sim import constants as C
from panos.sim.terrain import as_course

D_P = 60

JOINT_VELOCITY = slice(0, 12)
JOINT_EFFORT = slice(12, 24)
HIP_POSITION = slice(24, 28)
HIP_VELOCITY = slice(28, 32)
FOOT_POSITION = slice(32, 44)
FOOT_VELOCITY = slice(44, 56)
FOOT_CONTACT = slice(56, 60)


class ProprioState(object):
    """One proprioceptive reading.

    The flattened vector (:meth:`flatten`, length :data:`D_P`) holds joint
    velocity, joint effort, hip position, hip velocity, foot position, foot
    velocity and foot contact. Foot slip is kept beside it.
    """
    __slots__ = ('joint_velocity', 'joint_effort', 'hip_position',
                 'hip_velocity', 'foot_position', 'foot_velocity',
                 'foot_contact', 'foot_slip')

    def __init__(self, joint_velocity, joint_effort, hip_position,
                 hip_velocity, foot_position, foot_velocity, foot_contact,
                 foot_slip):
        self.joint_velocity = np.asarray(joint_velocity, dtype=np.float64)
        self.joint_effort = np.asarray(joint_effort, dtype=np.float64)
        self.hip_position = np.asarray(hip_position, dtype=np.float64)
        self.hip_velocity = np.asarray(hip_velocity, dtype=np.float64)
        self.foot_position = np.asarray(foot_position,
                                        dtype=np.float64).reshape(4, 3)
        self.foot_velocity = np.asarray(foot_velocity,
                                        dtype=np.float64).reshape(4, 3)
        self.foot_contact = np.asarray(foot_contact, dtype=np.float64)
        self.foot_slip = np.asarray(foot_slip, dtype=np.float64)

    def flatten(self):
        return np.concatenate([self.joint_velocity,
                               self.joint_effort,
                               self.hip_position,
                               self.hip_velocity,
                               self.foot_position.ravel(),
                               self.foot_velocity.ravel(),
                               self.foot_contact])


class ImuSample(object):
    __slots__ = ('imu_id', 'accel', 'timestamp')

    def __init__(self, imu_id, accel, timestamp):
        self.imu_id = imu_id
        self.accel = accel
        self.timestamp = timestamp

    def __repr__(self):
        return 'ImuSample(%s, %s, t=%s)' % (self.imu_id, self.accel.tolist(),
                                            self.timestamp)


class SimState(object):
    """Mutable simulator state.

    Args:
        terrain (TerrainSpec/TerrainCourse): Surface to walk.
        seed (int): Seed of the noise generator.
    """
    __slots__ = ('course', 'rng', 'time', 'position', 'phase', 'vibration',
                 'hip_vibration', 'impact', 'stance')

    def __init__(self, terrain, seed):
        self.course = as_course(terrain)
        self.rng = np.random.default_rng(seed)
        self.time = 0.0
        self.position = 0.0
        self.phase = 0.0
        self.vibration = np.zeros((5, 3))
        self.hip_vibration = np.zeros(4)
        self.impact = np.zeros(5)
        self.stance = np.ones(4, dtype=bool)

    @property
    def terrain(self):
        return self.course.terrain_at(self.position)


def gait_frequency(v_cmd):
    """Stride frequency in Hz, 2 Hz per m/s clamped to [1, 4]."""
    return float(np.clip(C.GAIT_HZ_PER_MPS * v_cmd, C.GAIT_MIN_HZ,
                         C.GAIT_MAX_HZ))


def slip_gain(v_cmd, terrain, payload_mass):
    """Noise free per-foot slip before clipping and gating."""
    return (C.K_S * v_cmd ** 2 *
            (1.0 - terrain.friction_coeff) *
            (1.0 + payload_mass / C.M_BODY) *
            (1.0 + C.K_R * terrain.roughness / C.ROUGHNESS_REF))


def vibration_amplitude(v_cmd, terrain, payload_mass):
    """Band-limited IMU vibration amplitude, m/s^2."""
    return (C.K_A * v_cmd * terrain.roughness *
            (1.0 + payload_mass / C.M_BODY))


def _ar1(previous, coefficient, noise):
    return coefficient * previous + np.sqrt(1.0 - coefficient ** 2) * noise


def step(state, v_cmd, payload_mass, dt=C.DT):
    """Advance the simulator by one step.

    The state is advanced in place and returned for convenience.

    Args:
        state (SimState): Simulator state.
        v_cmd (float): Commanded forward velocity m/s, >= 0.
        payload_mass (float): Payload kg, >= 0.
        dt (float): Step in seconds, (0, 0.1].

    Returns tuple (state, ProprioState, list of 5 ImuSample, achieved m/s).
    """
    if not v_cmd >= 0:
        raise InvalidArgument('v_cmd must be >= 0, got %s' % v_cmd)
    if not 0 < dt <= 0.1:
        raise InvalidArgument('dt must be in (0, 0.1], got %s' % dt)
    if not payload_mass >= 0:
        raise InvalidArgument('payload_mass must be >= 0, got %s' %
                              payload_mass)

    rng = state.rng
    terrain = state.terrain
    moving = v_cmd > 0
    load = 1.0 + payload_mass / C.M_BODY
    freq = gait_frequency(v_cmd)

    # Gait phase; a robot at rest stands on all four feet.
    if moving:
        state.phase = (state.phase + freq * dt) % 1.0
    psi = (state.phase + C.GAIT_OFFSETS) % 1.0
    if moving:
        stance = psi < C.DUTY
    else:
        stance = np.ones(4, dtype=bool)
    touchdown = stance & ~state.stance
    state.stance = stance

    # Slip, gated by stance.
    slip_noise = rng.normal(0.0, C.SLIP_NOISE, 4)
    if moving:
        slip = np.clip(slip_gain(v_cmd, terrain, payload_mass) + slip_noise,
                       0.0, 1.0) * stance
    else:
        slip = np.zeros(4)
    achieved = v_cmd * (1.0 - slip.mean())

    # Leg kinematics.
    swing_phase = np.where(stance, 0.0, (psi - C.DUTY) / (1.0 - C.DUTY))
    hip_amp = C.HIP_SWING_PER_MPS * v_cmd
    knee_amp = C.KNEE_LIFT_PER_MPS * v_cmd
    abd_amp = C.ABD_SWAY_PER_MPS * v_cmd
    omega = 2.0 * np.pi * freq

    hip_coef = np.exp(-2.0 * np.pi * C.VIBRATION_CUTOFF_HZ * dt)
    hip_noise = rng.normal(0.0, 1.0, 4)
    previous_hip_vibration = state.hip_vibration
    state.hip_vibration = _ar1(previous_hip_vibration, hip_coef, hip_noise)
    hip_vib_amp = (C.HIP_VIBRATION_GAIN * v_cmd * terrain.roughness * load *
                   (1.0 - 0.5 * terrain.compliance))

    hip_position = (C.HIP_NOMINAL +
                    hip_amp * np.sin(2.0 * np.pi * psi) +
                    hip_vib_amp * state.hip_vibration)
    hip_velocity = (hip_amp * omega * np.cos(2.0 * np.pi * psi) +
                    hip_vib_amp * (state.hip_vibration -
                                   previous_hip_vibration) / dt)

    knee_rate = np.where(stance, 0.0,
                         -knee_amp * np.pi * freq / (1.0 - C.DUTY) *
                         np.cos(np.pi * swing_phase))
    abd_rate = np.full(4, abd_amp * omega * np.cos(2.0 * np.pi * state.phase))
    joint_velocity = np.stack([abd_rate, hip_velocity, knee_rate],
                              axis=1).ravel()

    # Feet in body frame; stance feet sweep back at the commanded speed less
    # the slipped fraction.
    stride = v_cmd * C.DUTY / freq
    lift = C.FOOT_LIFT * min(v_cmd, 1.0)
    stance_progress = np.where(stance, psi / C.DUTY, 0.0)
    foot_position = C.FOOT_NOMINAL.copy()
    foot_position[:, 0] += np.where(stance,
                                    stride / 2 - stride * stance_progress,
                                    -stride / 2 + stride * swing_phase)
    foot_position[:, 2] += np.where(stance, 0.0,
                                    lift * np.sin(np.pi * swing_phase))
    foot_velocity = np.zeros((4, 3))
    foot_velocity[:, 0] = np.where(stance,
                                   -v_cmd * (1.0 - slip),
                                   stride * freq / (1.0 - C.DUTY))
    foot_velocity[:, 2] = np.where(stance, 0.0,
                                   lift * np.pi * freq / (1.0 - C.DUTY) *
                                   np.cos(np.pi * swing_phase))

    # Joint effort: body weight shared by stance feet, softened by compliance.
    n_stance = max(int(stance.sum()), 1)
    leg_load = (C.M_BODY + payload_mass) * C.G / n_stance
    stance_effort = (leg_load * C.EFFORT_LEVER *
                     (1.0 + C.EFFORT_COMPLIANCE_GAIN * terrain.compliance))
    swing_effort = C.SWING_EFFORT * freq * min(v_cmd, 1.0)
    joint_effort = np.where(stance[:, None], stance_effort[None, :],
                            swing_effort[None, :]).ravel()

    jv_noise = rng.normal(0.0, 1.0, 12)
    effort_noise = rng.normal(0.0, 1.0, 12)
    joint_velocity = joint_velocity + C.JOINT_VELOCITY_NOISE * v_cmd * jv_noise
    joint_effort = joint_effort + C.EFFORT_NOISE * v_cmd * load * effort_noise

    # IMUs: gravity, band-limited vibration, touchdown impulses, noise floor.
    vib_coef = np.exp(-2.0 * np.pi * C.VIBRATION_CUTOFF_HZ * dt)
    state.vibration = _ar1(state.vibration, vib_coef,
                           rng.normal(0.0, 1.0, (5, 3)))
    vib_amp = vibration_amplitude(v_cmd, terrain, payload_mass)

    state.impact = state.impact * C.IMPACT_DECAY
    if touchdown.any():
        strength = (C.K_IMPACT * v_cmd * load *
                    (1.0 - 0.5 * terrain.compliance))
        feet_xy = C.FOOT_NOMINAL[touchdown, :2]
        distance = np.linalg.norm(C.IMU_POSITIONS[:, None, :] -
                                  feet_xy[None, :, :], axis=2)
        state.impact = state.impact + strength * np.exp(-distance /
                                                        0.3).sum(axis=1)

    accel = np.zeros((5, 3))
    accel[:, 2] = C.G
    accel += vib_amp * state.vibration
    accel[:, 2] += state.impact
    accel += rng.normal(0.0, C.IMU_NOISE, (5, 3))

    state.position += achieved * dt
    state.time += dt

    proprio = ProprioState(joint_velocity, joint_effort, hip_position,
                           hip_velocity, foot_position, foot_velocity,
                           stance.astype(np.float64), slip)

    if not (np.isfinite(proprio.flatten()).all() and
            np.isfinite(accel).all() and
            np.isfinite(state.position) and
            np.isfinite(achieved)):
        raise SimulatorDivergence('non-finite state at t=%.3fs' % state.time)

    imus = [ImuSample(imu_id, accel[index], state.time)
            for index, imu_id in enumerate(C.IMU_IDS)]

    return state, proprio, imus, achieved
