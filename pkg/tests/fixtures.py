# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.dataset.sequence import Sequence
from panos.network.params import ModelParams
from panos.sim.world import D_P


def random_sequence(rng, index=0, slip=None, v_applied=None, image=None):
    if slip is None:
        slip = rng.uniform(0.0, 0.6)
    if v_applied is None:
        v_applied = rng.uniform(0.3, 2.5)
    if image is None:
        image = rng.uniform(0.0, 1.0, (64, 64, 3))
    return Sequence(image, rng.normal(0.0, 1.0, D_P), v_applied, slip,
                    (7, index))


def random_sequences(n, seed=0):
    rng = np.random.default_rng(seed)
    return [random_sequence(rng, i) for i in range(n)]


def small_params(encoder_hidden=60, head_hidden=32, mode='select',
                 alpha_init=0.1):
    return ModelParams.initialize(11, 12, encoder_hidden, head_hidden, mode,
                                  alpha_init, 'test')
