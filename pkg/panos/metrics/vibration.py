# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument
from panos.sim import constants as C
from panos.sim.world import HIP_POSITION


def hip_offset_cost(hip_positions, nominal=C.HIP_NOMINAL,
                    leg_length=C.LEG_LENGTH):
    """RMS hip angle deviation per hip, averaged over hips, as cm of arc.

    Args:
        hip_positions (ndarray): (n, 4) hip angles rad.
    """
    hip_positions = np.asarray(hip_positions, dtype=np.float64)
    if hip_positions.ndim != 2 or hip_positions.shape[1] != 4:
        raise InvalidArgument('hip positions must be (n, 4)')
    if len(hip_positions) == 0:
        raise InvalidArgument('empty log')
    rms = np.sqrt(((hip_positions - nominal) ** 2).mean(axis=0))
    return float(rms.mean() * leg_length * 100.0)


def vibration_cost(log):
    """Vibration cost of a RunLog in cm."""
    return hip_offset_cost(log.proprio[:, HIP_POSITION])
