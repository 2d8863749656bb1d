# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument


class ConstantProfile(object):
    """v(t) = velocity."""
    __slots__ = ('velocity',)

    def __init__(self, velocity):
        if velocity < 0:
            raise InvalidArgument('velocity must be >= 0')
        self.velocity = float(velocity)

    def __call__(self, t):
        return self.velocity

    def describe(self):
        return {'kind': 'constant', 'velocity': self.velocity}


class SegmentProfile(object):
    """Piecewise constant operator commands.

    Each ``segment`` seconds a new velocity is drawn uniformly from
    [low, high], mimicking a robot driven by hand with varying speeds.

    Args:
        duration (float): Seconds to cover.
        seed (int): Seed of the draw.
        segment (float): Seconds per constant command.
        low (float): Lowest command m/s.
        high (float): Highest command m/s.
    """
    __slots__ = ('segment', 'values', 'seed')

    def __init__(self, duration, seed, segment=5.0, low=0.3, high=2.5):
        if segment <= 0 or duration <= 0:
            raise InvalidArgument('segment and duration must be > 0')
        if not 0 <= low <= high:
            raise InvalidArgument('expected 0 <= low <= high')
        count = int(np.ceil(duration / segment))
        rng = np.random.default_rng(seed)
        self.segment = float(segment)
        self.seed = int(seed)
        self.values = rng.uniform(low, high, count)

    def __call__(self, t):
        index = min(int(t // self.segment), len(self.values) - 1)
        return float(self.values[max(index, 0)])

    def describe(self):
        return {'kind': 'segments', 'segment': self.segment,
                'seed': self.seed, 'values': self.values.tolist()}
