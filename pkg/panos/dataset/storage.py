# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Dataset files.

Layout (little-endian)::

    magic     4 bytes  b'PNSD'
    version   u16
    count     u64
    count x record:
        run_id        u64
        window_index  u32
        v_applied     f32
        mean_slip     f32
        proprio       60 x f32
        image         64 x 64 x 3 x f32 (row-major, channel last)
"""
import struct

import numpy as np

from panos.core.logger import GetLogger
from panos.core.exceptions import InvalidArgument, ParseError, VersionError
from panos.dataset.sequence import Sequence
from panos.sim import constants as C
from panos.sim.world import D_P
from panos.utils.binary import f32_bytes, f32_array, Reader
from panos.utils.timer import Timer

log = GetLogger(__name__)

MAGIC = b'PNSD'
VERSION = 1

_HEADER = struct.Struct('<4sHQ')
_RECORD_HEAD = struct.Struct('<QIff')
_IMAGE_SHAPE = (C.IMAGE_SIZE, C.IMAGE_SIZE, 3)
RECORD_SIZE = (_RECORD_HEAD.size + 4 * D_P +
               4 * int(np.prod(_IMAGE_SHAPE)))


def write_dataset(sequences, path):
    """Write sequences to path.

    Returns path.
    """
    with Timer() as elapsed:
        with open(path, 'wb') as f:
            f.write(_HEADER.pack(MAGIC, VERSION, len(sequences)))
            for sequence in sequences:
                run_id, window_index = sequence.source
                f.write(_RECORD_HEAD.pack(run_id, window_index,
                                          sequence.v_applied,
                                          sequence.mean_slip))
                f.write(f32_bytes(sequence.proprio))
                f.write(f32_bytes(sequence.image))

    log.info("Wrote dataset '%s' (%s sequences)" % (path, len(sequences)),
             timer=elapsed())
    return path


def read_dataset(path):
    """Read sequences written by :func:`write_dataset`.

    Raises:
        ParseError: bad magic or truncated data, naming the last complete
            record.
        VersionError: unsupported format version.
    """
    with open(path, 'rb') as f:
        reader = Reader(f.read())

    try:
        magic, version, count = reader.unpack(_HEADER.format)
    except EOFError:
        raise ParseError(path, -1, 'truncated header') from None
    if magic != MAGIC:
        raise ParseError(path, -1, 'bad magic %r' % magic)
    if version != VERSION:
        raise VersionError(path, version, VERSION)

    sequences = []
    for index in range(count):
        try:
            run_id, window_index, v_applied, mean_slip = reader.unpack(
                _RECORD_HEAD.format)
            proprio = f32_array(reader.read(4 * D_P), (D_P,))
            image = f32_array(reader.read(4 * int(np.prod(_IMAGE_SHAPE))),
                              _IMAGE_SHAPE)
        except EOFError:
            raise ParseError(path, index - 1,
                             'truncated at record %s of %s' % (
                                 index, count)) from None
        try:
            sequences.append(Sequence(image, proprio, v_applied, mean_slip,
                                      (run_id, window_index)))
        except InvalidArgument as e:
            raise ParseError(path, index - 1, 'record %s: %s' % (
                index, e)) from None

    if reader.remaining() != 0:
        raise ParseError(path, count - 1, '%s trailing bytes' %
                         reader.remaining())

    log.debug("Read dataset '%s' (%s sequences)" % (path, count))
    return sequences
