# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from enum import Enum

from panos.core.exceptions import InvalidArgument
from panos.sim.constants import TERRAIN_TABLE


class TerrainClass(Enum):
    Concrete = 'Concrete'
    Grass = 'Grass'
    Gravel = 'Gravel'
    PebbleSidewalk = 'PebbleSidewalk'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip())
        except ValueError:
            raise InvalidArgument("Unknown terrain class '%s'" % value +
                                  " (expected %s)" %
                                  ', '.join(c.value for c in cls)) from None


class TerrainSpec(object):
    """Parameterized terrain.

    Args:
        terrain_class (TerrainClass): Class of surface.
        friction_coeff (float): Friction in (0, 1].
        roughness (float): Height standard deviation in meters, >= 0.
        compliance (float): Softness in [0, 1].
        visual_seed (int): 64-bit seed for rendered texture.
    """
    __slots__ = ('terrain_class', 'friction_coeff', 'roughness',
                 'compliance', 'visual_seed')

    def __init__(self, terrain_class, friction_coeff, roughness, compliance,
                 visual_seed):
        if not 0 < friction_coeff <= 1:
            raise InvalidArgument('friction_coeff must be in (0, 1]')
        if roughness < 0:
            raise InvalidArgument('roughness must be >= 0')
        if not 0 <= compliance <= 1:
            raise InvalidArgument('compliance must be in [0, 1]')
        self.terrain_class = TerrainClass.parse(terrain_class)
        self.friction_coeff = float(friction_coeff)
        self.roughness = float(roughness)
        self.compliance = float(compliance)
        self.visual_seed = int(visual_seed) & 0xFFFFFFFFFFFFFFFF

    @property
    def name(self):
        return self.terrain_class.value

    def _key(self):
        return (self.terrain_class, self.friction_coeff, self.roughness,
                self.compliance, self.visual_seed)

    def __eq__(self, other):
        return isinstance(other, TerrainSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return ('TerrainSpec(%s, friction=%s, roughness=%s, compliance=%s,'
                ' seed=%s)' % self._key())

    def to_dict(self):
        return {'terrain_class': self.name,
                'friction_coeff': self.friction_coeff,
                'roughness': self.roughness,
                'compliance': self.compliance,
                'visual_seed': self.visual_seed}

    @classmethod
    def from_dict(cls, data):
        return cls(data['terrain_class'], data['friction_coeff'],
                   data['roughness'], data['compliance'], data['visual_seed'])


def make_terrain(terrain_class, seed):
    """Default parameter row for a terrain class.

    >>> make_terrain('Gravel', 7).friction_coeff
    0.45
    """
    terrain_class = TerrainClass.parse(terrain_class)
    friction, roughness, compliance = TERRAIN_TABLE[terrain_class.value]
    return TerrainSpec(terrain_class, friction, roughness, compliance, seed)


class TerrainCourse(object):
    """Straight path made of terrain segments.

    Args:
        segments (list): (TerrainSpec, length in meters) tuples. The last
            segment extends indefinitely.
    """
    __slots__ = ('segments', '_ends')

    def __init__(self, segments):
        if len(segments) == 0:
            raise InvalidArgument('course needs at least one segment')
        self.segments = []
        self._ends = []
        end = 0.0
        for terrain, length in segments:
            if length <= 0:
                raise InvalidArgument('segment length must be > 0')
            end += float(length)
            self.segments.append((terrain, float(length)))
            self._ends.append(end)

    def terrain_at(self, position):
        for (terrain, _), end in zip(self.segments, self._ends):
            if position < end:
                return terrain
        return self.segments[-1][0]

    def spans(self, start, stop):
        """(terrain, lo, hi) pieces covering [start, stop)."""
        pieces = []
        lo = start
        begin = 0.0
        for index, ((terrain, _), end) in enumerate(zip(self.segments,
                                                        self._ends)):
            if index == len(self.segments) - 1:
                end = float('inf')
            if lo < end and begin < stop:
                hi = min(stop, end)
                pieces.append((terrain, lo, hi))
                lo = hi
            begin = end
            if lo >= stop:
                break
        return pieces

    @property
    def first(self):
        return self.segments[0][0]

    def __eq__(self, other):
        return (isinstance(other, TerrainCourse) and
                self.segments == other.segments)

    def to_list(self):
        return [{'terrain': terrain.to_dict(), 'length': length}
                for terrain, length in self.segments]

    @classmethod
    def from_list(cls, data):
        return cls([(TerrainSpec.from_dict(item['terrain']), item['length'])
                    for item in data])


def as_course(terrain):
    """TerrainCourse for a TerrainSpec or TerrainCourse."""
    if isinstance(terrain, TerrainCourse):
        return terrain
    if isinstance(terrain, TerrainSpec):
        return TerrainCourse([(terrain, 1.0)])
    raise InvalidArgument('expected TerrainSpec or TerrainCourse, got %r' %
                          (terrain,))


def make_course(classes, segment_length, seed):
    """Course cycling through terrain classes, each segment_length meters.

    Every segment gets its own visual seed derived from seed.
    """
    return TerrainCourse([(make_terrain(cls, seed + index), segment_length)
                          for index, cls in enumerate(classes)])
