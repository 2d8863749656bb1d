# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.network.params import TRAINABLE, ALPHA_RAW_MAX


class Adam(object):
    """Adaptive moment estimation with bias correction.

    Args:
        learning_rate (float): Step size.
        beta1 (float): First moment decay.
        beta2 (float): Second moment decay.
        weight_decay (dict): L2 coefficient per parameter name, added to its
            gradient before the moment update.
        eps (float): Denominator floor.
    """
    def __init__(self, learning_rate=1e-3, beta1=0.9, beta2=0.999,
                 weight_decay=None, eps=1e-8):
        self.learning_rate = learning_rate
        self.beta1 = beta1
        self.beta2 = beta2
        self.weight_decay = dict(weight_decay or {})
        self.eps = eps
        self.t = 0
        self.m = {}
        self.v = {}

    def step(self, params, grads):
        """Update params.values in place."""
        self.t += 1
        correction1 = 1.0 - self.beta1 ** self.t
        correction2 = 1.0 - self.beta2 ** self.t
        values = params.values
        for name in TRAINABLE:
            grad = grads[name]
            decay = self.weight_decay.get(name)
            if decay:
                grad = grad + decay * values[name]
            m = self.m.get(name, 0.0)
            v = self.v.get(name, 0.0)
            m = self.beta1 * m + (1.0 - self.beta1) * grad
            v = self.beta2 * v + (1.0 - self.beta2) * grad * grad
            self.m[name] = m
            self.v[name] = v
            update = (self.learning_rate * (m / correction1) /
                      (np.sqrt(v / correction2) + self.eps))
            values[name] = values[name] - update

        # alpha = softplus(alpha_raw) stays within (0, ALPHA_MAX].
        values['alpha_raw'] = np.minimum(values['alpha_raw'], ALPHA_RAW_MAX)
