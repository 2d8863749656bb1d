# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Synthetic terrain observations.

A frame looks at the ground ahead of the robot: rows run forward along the
path from ``position`` to ``position + VIEW_LENGTH``, columns span the path
width. Channels:

0. local heightmap, 0.5 at zero height, +-HEIGHT_RANGE mapped to [0, 1]
1. class texture, seeded value noise with class scale and contrast
2. constant class tint
"""
import numpy as np

from panos.core.exceptions import InvalidArgument
from panos.sim.constants import IMAGE_SIZE
from panos.sim.terrain import as_course

VIEW_LENGTH = 2.0
VIEW_WIDTH = 2.0
HEIGHT_RANGE = 0.05
HEIGHT_SCALE = 0.15

# class: (texture cell size m, contrast, tint)
TEXTURE = {
    'Concrete': (0.5, 0.1, 0.80),
    'Grass': (0.05, 0.5, 0.35),
    'Gravel': (0.03, 0.8, 0.55),
    'PebbleSidewalk': (0.1, 0.6, 0.65),
}

_HEIGHT_SALT = np.uint64(0x9E3779B97F4A7C15)
_TEXTURE_SALT = np.uint64(0xBF58476D1CE4E5B9)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)


def _mix(z):
    # splitmix64 finalizer
    z = z ^ (z >> np.uint64(30))
    z = z * _M1
    z = z ^ (z >> np.uint64(27))
    z = z * _M2
    return z ^ (z >> np.uint64(31))


def _lattice(ix, iy, seed):
    """Uniform [0, 1) value per integer lattice point."""
    with np.errstate(over='ignore'):
        z = _mix(ix.astype(np.int64).astype(np.uint64) ^
                 _mix(iy.astype(np.int64).astype(np.uint64) ^
                      np.uint64(seed)))
    return (z >> np.uint64(11)).astype(np.float64) / float(1 << 53)


def value_noise(x, y, cell, seed):
    """Smooth value noise in [0, 1] at world coordinates (meters).

    Lattice values depend only on the world position, so overlapping views
    agree pixel for pixel.
    """
    u = x / cell
    v = y / cell
    iu = np.floor(u)
    iv = np.floor(v)
    fu = u - iu
    fv = v - iv
    fu = fu * fu * (3.0 - 2.0 * fu)
    fv = fv * fv * (3.0 - 2.0 * fv)
    a = _lattice(iu, iv, seed)
    b = _lattice(iu + 1, iv, seed)
    c = _lattice(iu, iv + 1, seed)
    d = _lattice(iu + 1, iv + 1, seed)
    top = a + (b - a) * fu
    bottom = c + (d - c) * fu
    return top + (bottom - top) * fv


def _grid(start, stop):
    rows = np.arange(IMAGE_SIZE)
    x = start + (rows + 0.5) * VIEW_LENGTH / IMAGE_SIZE
    y = -VIEW_WIDTH / 2 + (rows + 0.5) * VIEW_WIDTH / IMAGE_SIZE
    return x, y


def render_observation(terrain, position):
    """Render the ground ahead of the robot.

    Args:
        terrain (TerrainSpec/TerrainCourse): Surface being walked.
        position (float): Meters along the path, >= 0.

    Returns float32 array of shape (64, 64, 3) in [0, 1].
    """
    if position < 0 or not np.isfinite(position):
        raise InvalidArgument('position must be finite and >= 0')

    course = as_course(terrain)
    x, y = _grid(position, position + VIEW_LENGTH)
    image = np.empty((IMAGE_SIZE, IMAGE_SIZE, 3), dtype=np.float64)

    for spec, lo, hi in course.spans(position, position + VIEW_LENGTH):
        rows = (x >= lo) & (x < hi)
        if not rows.any():
            continue
        xx, yy = np.meshgrid(x[rows], y, indexing='ij')
        cell, contrast, tint = TEXTURE[spec.name]
        seed = np.uint64(spec.visual_seed)

        if spec.roughness > 0:
            noise = value_noise(xx, yy, HEIGHT_SCALE, seed ^ _HEIGHT_SALT)
            height = spec.roughness * np.sqrt(3.0) * (2.0 * noise - 1.0)
            image[rows, :, 0] = np.clip(0.5 + height / (2 * HEIGHT_RANGE),
                                        0.0, 1.0)
        else:
            image[rows, :, 0] = 0.5

        texture = value_noise(xx, yy, cell, seed ^ _TEXTURE_SALT)
        image[rows, :, 1] = np.clip(0.5 + contrast * (texture - 0.5),
                                    0.0, 1.0)
        image[rows, :, 2] = tint

    return image.astype(np.float32)
