# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.logger import GetLogger
from panos.core.exceptions import InvalidArgument
from panos.sim import constants as C
from panos.sim.world import D_P

log = GetLogger(__name__)


class Sequence(object):
    """Synchronized (image, proprioception, applied velocity) window.

    All values are float32, the precision they are stored with.

    Args:
        image (ndarray): 64x64x3 observation in [0, 1] at window start.
        proprio (ndarray): Window mean of the flattened ProprioState.
        v_applied (float): Window mean commanded velocity m/s, the weak label.
        mean_slip (float): Mean per-foot slip over the window, [0, 1].
        source (tuple): (run id, window index).
    """
    __slots__ = ('image', 'proprio', 'v_applied', 'mean_slip', 'source')

    def __init__(self, image, proprio, v_applied, mean_slip, source):
        image = np.asarray(image, dtype=np.float32)
        proprio = np.asarray(proprio, dtype=np.float32)
        if image.shape != (C.IMAGE_SIZE, C.IMAGE_SIZE, 3):
            raise InvalidArgument('image must be %sx%sx3, got %s' % (
                C.IMAGE_SIZE, C.IMAGE_SIZE, image.shape))
        if proprio.shape != (D_P,):
            raise InvalidArgument('proprio must have length %s' % D_P)
        if not (image.min() >= 0 and image.max() <= 1):
            raise InvalidArgument('image values must be in [0, 1]')
        if not v_applied >= 0:
            raise InvalidArgument('v_applied must be >= 0')
        if not 0 <= mean_slip <= 1:
            raise InvalidArgument('mean_slip must be in [0, 1]')
        self.image = image
        self.proprio = proprio
        self.v_applied = np.float32(v_applied)
        self.mean_slip = np.float32(mean_slip)
        self.source = (int(source[0]), int(source[1]))

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return False
        return (self.source == other.source and
                self.v_applied.tobytes() == other.v_applied.tobytes() and
                self.mean_slip.tobytes() == other.mean_slip.tobytes() and
                self.proprio.tobytes() == other.proprio.tobytes() and
                self.image.tobytes() == other.image.tobytes())

    def __repr__(self):
        return 'Sequence(source=%s, v_applied=%.3f, mean_slip=%.3f)' % (
            self.source, self.v_applied, self.mean_slip)


def window_steps(runlog, window):
    """Steps per window, validating window against dt and frame interval."""
    if not window >= runlog.dt:
        raise InvalidArgument('window %ss is shorter than dt %ss' % (
            window, runlog.dt))
    steps = int(round(window / runlog.dt))
    if abs(steps * runlog.dt - window) > 1e-9:
        raise InvalidArgument('window %ss is not a multiple of dt' % window)
    frame_steps = int(round(1.0 / (runlog.frame_rate * runlog.dt)))
    if steps % frame_steps != 0:
        raise InvalidArgument('window %ss is not a multiple of the frame'
                              ' interval %ss' % (window,
                                                 1.0 / runlog.frame_rate))
    return steps


def form_sequences(runlog, window):
    """One Sequence per complete non-overlapping window of a RunLog.

    The trailing partial window is dropped.

    Args:
        runlog (RunLog): Source log.
        window (float): Window seconds, a multiple of the frame interval.

    Returns list of Sequence.
    """
    steps = window_steps(runlog, window)
    count = len(runlog) // steps
    sequences = []
    for w in range(count):
        lo = w * steps
        hi = lo + steps
        sequences.append(Sequence(runlog.frame(lo),
                                  runlog.proprio[lo:hi].mean(axis=0),
                                  runlog.commanded[lo:hi].mean(),
                                  runlog.slips[lo:hi].mean(),
                                  (runlog.run_id, w)))
    log.debug("Formed %s sequences from run %s (%s steps, window %ss)" % (
        count, runlog.run_id, len(runlog), window))
    return sequences
