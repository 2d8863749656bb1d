# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument
from panos.network.model import predict

SLIP_THRESHOLD = 0.2


class ControlInput(object):
    """What a controller sees at a control tick.

    Args:
        image (ndarray): Latest 64x64x3 observation.
        proprio (ndarray): (k, d_P) recent proprioception window.
        slips (ndarray): (k, 4) recent per-foot slips.
        previous (float): Command currently held.
    """
    __slots__ = ('image', 'proprio', 'slips', 'previous')

    def __init__(self, image, proprio, slips, previous):
        self.image = image
        self.proprio = np.asarray(proprio)
        self.slips = np.asarray(slips)
        self.previous = previous

    @property
    def mean_slip(self):
        if len(self.slips) == 0:
            return 0.0
        return float(np.clip(self.slips.mean(), 0.0, 1.0))


def clamp(v, v_min, v_max):
    return min(max(v, v_min), v_max)


def _check_limits(v_min, v_max, v_init):
    if not 0 <= v_min <= v_max:
        raise InvalidArgument('expected 0 <= v_min <= v_max')
    if not v_min <= v_init <= v_max:
        raise InvalidArgument('v_init must be within [v_min, v_max]')


class FixedVelocity(object):
    """Constant operator command, clamped to [v_min, v_max]."""
    name = 'fixed'

    def __init__(self, velocity=2.0, v_min=0.0, v_max=2.0):
        if not velocity >= 0:
            raise InvalidArgument('velocity must be >= 0')
        if not 0 <= v_min <= v_max:
            raise InvalidArgument('expected 0 <= v_min <= v_max')
        self.velocity = clamp(float(velocity), float(v_min), float(v_max))
        self.v_min = float(v_min)
        self.v_max = float(v_max)
        self.v_init = self.velocity

    def __call__(self, control_input):
        return self.velocity

    def describe(self):
        return {'controller': self.name, 'velocity': self.velocity,
                'v_min': self.v_min, 'v_max': self.v_max}


class ReactiveSlip(object):
    """Proprioception-only regulation.

    v <- clamp(v - gain * max(0, mean slip - 0.2), v_min, v_max)
    """
    name = 'reactive'

    def __init__(self, gain=0.5, v_min=0.2, v_max=2.0, v_init=2.0):
        if not gain > 0:
            raise InvalidArgument('gain must be > 0')
        _check_limits(v_min, v_max, v_init)
        self.gain = float(gain)
        self.v_min = float(v_min)
        self.v_max = float(v_max)
        self.v_init = float(v_init)

    def __call__(self, control_input):
        excess = max(0.0, control_input.mean_slip - SLIP_THRESHOLD)
        return clamp(control_input.previous - self.gain * excess,
                     self.v_min, self.v_max)

    def describe(self):
        return {'controller': self.name, 'gain': self.gain,
                'v_min': self.v_min, 'v_max': self.v_max,
                'v_init': self.v_init}


class PanosController(object):
    """Velocity from the trained model, clamped to [v_min, v_max].

    Args:
        params (ModelParams): Loaded weights.
        checkpoint (str): Path params came from (reporting only).
    """
    name = 'panos'

    def __init__(self, params, checkpoint=None, v_min=0.2, v_max=2.0,
                 v_init=2.0):
        _check_limits(v_min, v_max, v_init)
        self.params = params
        self.checkpoint = checkpoint
        self.v_min = float(v_min)
        self.v_max = float(v_max)
        self.v_init = float(v_init)

    def __call__(self, control_input):
        return panos_controller(self.params, control_input.image,
                                control_input.proprio, control_input.slips,
                                self.v_min, self.v_max)

    def describe(self):
        return {'controller': self.name, 'checkpoint': self.checkpoint,
                'v_min': self.v_min, 'v_max': self.v_max,
                'v_init': self.v_init}


def panos_controller(params, image, proprio_window, slips=None, v_min=0.2,
                     v_max=2.0):
    """Commanded velocity for the latest image and proprioception window.

    Args:
        params (ModelParams): Trained weights.
        image (ndarray): 64x64x3 observation.
        proprio_window (ndarray): (k, d_P) recent proprioception, k >= 1.
        slips (ndarray): (k, 4) recent slips; only used for confidence
            weighted models (optional).

    Returns float in [v_min, v_max].
    """
    proprio_window = np.asarray(proprio_window, dtype=np.float64)
    if proprio_window.ndim != 2 or len(proprio_window) == 0:
        raise InvalidArgument('proprio window must be (k, d_P), k >= 1')
    slip = 0.0
    if slips is not None and len(slips) > 0:
        slip = float(np.clip(np.mean(slips), 0.0, 1.0))
    trace = predict(image, proprio_window.mean(axis=0), slip, params)
    return clamp(trace.v_hat, v_min, v_max)
