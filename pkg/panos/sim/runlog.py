# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""RunLog files.

A RunLog is written as JSON-lines: one header record followed by one record
per step. Observation frames go to a sidecar file (``<path>.frames``) of
little-endian float32 values, frame after frame, each 64x64x3 row-major.
Step records reference frames by index.
"""
import os

import numpy as np

from panos.core.logger import GetLogger
from panos.core.exceptions import ParseError, VersionError
from panos.sim import constants as C
from panos.sim.rollout import RunLog
from panos.sim.terrain import TerrainCourse
from panos.utils import js
from panos.utils.binary import f32_bytes, f32_array

log = GetLogger(__name__)

FORMAT = 'panos-runlog'
VERSION = 1

FRAME_SHAPE = (C.IMAGE_SIZE, C.IMAGE_SIZE, 3)


def frames_path(path):
    return path + '.frames'


def write_runlog(runlog, path):
    """Write RunLog and its frame sidecar.

    Returns list of paths written.
    """
    header = {'format': FORMAT,
              'version': VERSION,
              'course': runlog.course.to_list(),
              'payload_mass': runlog.payload_mass,
              'dt': runlog.dt,
              'seed': runlog.seed,
              'frame_rate': runlog.frame_rate,
              'constants_hash': C.constants_hash(),
              'steps': len(runlog),
              'frames': len(runlog.frames),
              'meta': runlog.meta}

    with open(path, 'w', encoding='UTF-8', newline='\n') as f:
        f.write(js.dumpline(header) + '\n')
        for i in range(len(runlog)):
            record = {'step': i,
                      't': runlog.timestamps[i],
                      'commanded': runlog.commanded[i],
                      'achieved': runlog.achieved[i],
                      'proprio': runlog.proprio[i],
                      'slip': runlog.slips[i],
                      'imu': runlog.imu[i],
                      'frame': runlog.frame_index[i]}
            f.write(js.dumpline(record) + '\n')

    with open(frames_path(path), 'wb') as f:
        f.write(f32_bytes(runlog.frames))

    log.info("Wrote runlog '%s' (%s steps, %s frames)" % (
        path, len(runlog), len(runlog.frames)))

    return [path, frames_path(path)]


def _header(path, line):
    try:
        header = js.loads(line)
    except ValueError as e:
        raise ParseError(path, -1, 'bad header (%s)' % e) from None
    if not isinstance(header, dict) or header.get('format') != FORMAT:
        raise ParseError(path, -1, 'not a runlog file')
    if header.get('version') != VERSION:
        raise VersionError(path, header.get('version'), VERSION)
    return header


def read_runlog(path):
    """Read RunLog written by :func:`write_runlog`.

    Raises:
        ParseError: malformed or truncated file, naming the last complete
            step record.
        VersionError: unsupported format version.
    """
    with open(path, 'r', encoding='UTF-8') as f:
        lines = f.read().split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    if not lines:
        raise ParseError(path, -1, 'empty file')

    header = _header(path, lines[0])
    try:
        steps = int(header['steps'])
        n_frames = int(header['frames'])
        course = TerrainCourse.from_list(header['course'])
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(path, -1, 'bad header (%s)' % e) from None

    commanded = np.empty(steps)
    achieved = np.empty(steps)
    proprio = np.empty((steps, 60))
    slips = np.empty((steps, 4))
    imu = np.empty((steps, 5, 3))
    timestamps = np.empty(steps)
    frame_index = np.empty(steps, dtype=np.int64)

    records = lines[1:]
    for i in range(steps):
        if i >= len(records):
            raise ParseError(path, i - 1, 'expected %s step records' % steps)
        try:
            record = js.loads(records[i])
            if record['step'] != i:
                raise ValueError('step %s out of order' % record['step'])
            commanded[i] = record['commanded']
            achieved[i] = record['achieved']
            proprio[i] = record['proprio']
            slips[i] = record['slip']
            imu[i] = record['imu']
            timestamps[i] = record['t']
            frame_index[i] = record['frame']
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(path, i - 1, 'bad step record (%s)' % e) from None
    if len(records) > steps:
        raise ParseError(path, steps - 1, 'trailing data after last record')

    frame_bytes = int(np.prod(FRAME_SHAPE)) * 4
    expected = n_frames * frame_bytes
    try:
        size = os.path.getsize(frames_path(path))
    except OSError:
        raise ParseError(frames_path(path), -1, 'missing frames file') \
            from None
    if size != expected:
        complete = min(size, expected) // frame_bytes
        raise ParseError(frames_path(path), complete - 1,
                         'expected %s bytes, found %s' % (expected, size))
    with open(frames_path(path), 'rb') as f:
        frames = f32_array(f.read(), (n_frames,) + FRAME_SHAPE)

    if steps and (frame_index.min() < 0 or frame_index.max() >= n_frames):
        raise ParseError(path, steps - 1, 'frame index out of range')

    if header.get('constants_hash') != C.constants_hash():
        log.warning("Runlog '%s' was recorded with different simulator"
                    " constants" % path)

    return RunLog(course, header['payload_mass'], header['dt'],
                  header['seed'], header['frame_rate'], commanded, achieved,
                  proprio, slips, imu, timestamps, frame_index, frames,
                  header.get('meta'))
