# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Simulator constants.

The terrain table and body constants fix the slip, vibration and effort
scales. Changing any of them changes :func:`constants_hash`, which is recorded
in every RunLog header.
"""
import numpy as np

from panos.utils import js

# class: (friction, roughness m, compliance)
TERRAIN_TABLE = {
    'Concrete': (0.85, 0.002, 0.05),
    'Grass': (0.65, 0.008, 0.40),
    'Gravel': (0.45, 0.020, 0.30),
    'PebbleSidewalk': (0.55, 0.012, 0.15),
}

M_BODY = 32.0
G = 9.81

# Slip model
K_S = 0.08
K_R = 1.0
ROUGHNESS_REF = 0.02
SLIP_NOISE = 0.005

# Gait
GAIT_HZ_PER_MPS = 2.0
GAIT_MIN_HZ = 1.0
GAIT_MAX_HZ = 4.0
DUTY = 0.6
FEET = ('FR', 'FL', 'HR', 'HL')
# Trot: diagonal pairs share a phase.
GAIT_OFFSETS = np.array([0.0, 0.5, 0.5, 0.0])

# Kinematics (rad or m per m/s of command)
HIP_SWING_PER_MPS = 0.05
KNEE_LIFT_PER_MPS = 0.2
ABD_SWAY_PER_MPS = 0.02
FOOT_LIFT = 0.08
HIP_NOMINAL = np.array([0.1, -0.1, 0.1, -0.1])
KNEE_NOMINAL = -1.2
FOOT_NOMINAL = np.array([[0.30, -0.17, -0.50],
                         [0.30, 0.17, -0.50],
                         [-0.30, -0.17, -0.50],
                         [-0.30, 0.17, -0.50]])
LEG_LENGTH = 0.35

# Effective lever arms for joint effort (abduction, hip, knee), m
EFFORT_LEVER = np.array([0.01, 0.025, 0.05])
EFFORT_COMPLIANCE_GAIN = 0.5
SWING_EFFORT = np.array([0.05, 0.3, 0.5])

# Vibration
K_A = 25.0
HIP_VIBRATION_GAIN = 0.5
VIBRATION_CUTOFF_HZ = 15.0
K_IMPACT = 2.0
IMPACT_DECAY = 0.5
IMU_NOISE = 0.01

# Proprio sensor noise, scaled by command
JOINT_VELOCITY_NOISE = 0.01
EFFORT_NOISE = 0.05

IMU_IDS = ('FR', 'FL', 'HR', 'HL', 'C')
IMU_POSITIONS = np.array([[0.30, -0.15],
                          [0.30, 0.15],
                          [-0.30, -0.15],
                          [-0.30, 0.15],
                          [0.35, 0.0]])

DT = 0.01
FRAME_RATE = 10.0
IMAGE_SIZE = 64


def constants_hash():
    """SHA-256 over every simulator constant."""
    table = {}
    for name, value in sorted(globals().items()):
        if name.isupper():
            if isinstance(value, np.ndarray):
                value = value.tolist()
            table[name] = value
    return js.digest(table)
