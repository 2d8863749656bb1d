# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import struct

import numpy as np

F32 = np.dtype('<f4')


def f32_bytes(values):
    """Little-endian float32 bytes of an array-like."""
    return np.ascontiguousarray(values, dtype=F32).tobytes()


def f32_array(buf, shape):
    """Float32 array (native dtype) from little-endian bytes."""
    return np.frombuffer(buf, dtype=F32).astype(np.float32).reshape(shape)


def pack_str(value):
    """u16 length prefixed UTF-8 string."""
    raw = value.encode('UTF-8')
    return struct.pack('<H', len(raw)) + raw


class Reader(object):
    """Sequential reader over a bytes buffer.

    Raises EOFError when fewer bytes remain than requested.
    """
    __slots__ = ('buf', 'pos')

    def __init__(self, buf):
        self.buf = buf
        self.pos = 0

    def read(self, n):
        if self.pos + n > len(self.buf):
            raise EOFError('need %s bytes at offset %s, have %s' % (
                n, self.pos, len(self.buf) - self.pos))
        chunk = self.buf[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def unpack(self, fmt):
        return struct.unpack(fmt, self.read(struct.calcsize(fmt)))

    def string(self):
        (length,) = self.unpack('<H')
        return self.read(length).decode('UTF-8')

    def remaining(self):
        return len(self.buf) - self.pos
