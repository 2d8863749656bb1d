# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Checkpoint files.

Layout (little-endian)::

    magic            4 bytes  b'PNSW'
    version          u16
    n_v, d_v, d_p    3 x u16
    encoder_hidden   u16
    head_hidden      u16
    tokenizer_seed   u64
    param_seed       u64
    confidence_mode  u16 length + UTF-8
    config_hash      u16 length + UTF-8
    blocks           u16
    blocks x:
        name         u16 length + UTF-8
        ndim         u8
        shape        ndim x u32
        data         prod(shape) x f32
"""
import struct

import numpy as np

from panos.core.logger import GetLogger
from panos.core.exceptions import (CheckpointError, ParseError,
                                   VersionError)
from panos.network.params import (ModelParams, TRAINABLE, BUFFERS, N_V,
                                  D_V, PATCH_DIM, ALPHA_MAX,
                                  ALPHA_RAW_MAX)
from panos.sim.world import D_P
from panos.utils.binary import f32_bytes, f32_array, pack_str, Reader

log = GetLogger(__name__)

MAGIC = b'PNSW'
VERSION = 1

_HEADER = '<4sH5H2Q'


def _block(name, array):
    array = np.asarray(array)
    return (pack_str(name) +
            struct.pack('<B', array.ndim) +
            struct.pack('<%sI' % array.ndim, *array.shape) +
            f32_bytes(array))


def save_checkpoint(params, path):
    """Write params to path. Returns path."""
    meta = params.meta
    blocks = [('tokenizer', params.tokenizer)]
    blocks += [(name, params.values[name]) for name in TRAINABLE]
    blocks += [(name, params.buffers[name]) for name in BUFFERS]

    with open(path, 'wb') as f:
        f.write(struct.pack(_HEADER, MAGIC, VERSION,
                            meta['n_v'], meta['d_v'], meta['d_p'],
                            meta['encoder_hidden'], meta['head_hidden'],
                            meta['tokenizer_seed'], meta['param_seed']))
        f.write(pack_str(meta['confidence_mode']))
        f.write(pack_str(meta['config_hash']))
        f.write(struct.pack('<H', len(blocks)))
        for name, array in blocks:
            f.write(_block(name, array))

    log.debug("Saved checkpoint '%s'" % path)
    return path


def _expected_shapes(encoder_hidden, head_hidden):
    return {'tokenizer': (PATCH_DIM, D_V),
            'enc_w1': (encoder_hidden, D_P),
            'enc_b1': (encoder_hidden,),
            'enc_w2': (D_P, encoder_hidden),
            'enc_b2': (D_P,),
            'query': (D_V, D_P),
            'head_w1': (head_hidden, D_V),
            'head_b1': (head_hidden,),
            'head_w2': (head_hidden,),
            'head_b2': (),
            'alpha_raw': (),
            'proprio_mean': (D_P,),
            'proprio_scale': (D_P,)}


def load_checkpoint(path, config_hash=None):
    """Read checkpoint.

    Args:
        path (str): Checkpoint file.
        config_hash (str): Expected network config hash (optional).

    Raises:
        ParseError: malformed file.
        VersionError: unsupported version.
        CheckpointError: dims or config hash do not match.

    Returns ModelParams (float64 values, float32 frozen tokenizer).
    """
    try:
        with open(path, 'rb') as f:
            reader = Reader(f.read())
    except OSError as e:
        raise CheckpointError("Checkpoint '%s' not readable (%s)" % (
            path, e.strerror)) from None

    try:
        (magic, version, n_v, d_v, d_p, encoder_hidden, head_hidden,
         tokenizer_seed, param_seed) = reader.unpack(_HEADER)
    except EOFError:
        raise ParseError(path, -1, 'truncated header') from None
    if magic != MAGIC:
        raise ParseError(path, -1, 'bad magic %r' % magic)
    if version != VERSION:
        raise VersionError(path, version, VERSION)
    if (n_v, d_v, d_p) != (N_V, D_V, D_P):
        raise CheckpointError("Checkpoint '%s' dims (n_v=%s, d_v=%s, d_p=%s)"
                              " do not match model (%s, %s, %s)" % (
                                  path, n_v, d_v, d_p, N_V, D_V, D_P))

    shapes = _expected_shapes(encoder_hidden, head_hidden)
    arrays = {}
    block = -1
    try:
        confidence_mode = reader.string()
        stored_hash = reader.string()
        (count,) = reader.unpack('<H')
        for block in range(count):
            name = reader.string()
            (ndim,) = reader.unpack('<B')
            shape = reader.unpack('<%sI' % ndim)
            if name not in shapes or tuple(shape) != shapes[name]:
                raise CheckpointError("Checkpoint '%s' block '%s' shape %s"
                                      " unexpected" % (path, name, shape))
            size = int(np.prod(shape, dtype=np.int64))
            arrays[name] = f32_array(reader.read(4 * size), shape)
    except (EOFError, UnicodeDecodeError):
        raise ParseError(path, block - 1, 'truncated block data') from None

    missing = set(shapes) - set(arrays)
    if missing:
        raise CheckpointError("Checkpoint '%s' missing blocks %s" % (
            path, ', '.join(sorted(missing))))
    if reader.remaining() != 0:
        raise ParseError(path, len(arrays) - 1, 'trailing bytes')

    if config_hash is not None and stored_hash != config_hash:
        raise CheckpointError("Checkpoint '%s' config hash %s does not match"
                              " network config %s" % (path, stored_hash,
                                                      config_hash))

    tokenizer = arrays.pop('tokenizer')
    tokenizer.flags.writeable = False
    values = {name: arrays[name].astype(np.float64) for name in TRAINABLE}
    buffers = {name: arrays[name].astype(np.float64) for name in BUFFERS}
    meta = {'tokenizer_seed': tokenizer_seed,
            'param_seed': param_seed,
            'n_v': n_v, 'd_v': d_v, 'd_p': d_p,
            'encoder_hidden': encoder_hidden,
            'head_hidden': head_hidden,
            'confidence_mode': confidence_mode,
            'config_hash': stored_hash}
    params = ModelParams(tokenizer, values, buffers, meta)
    if not params.is_finite():
        raise CheckpointError("Checkpoint '%s' holds non-finite values" %
                              path)
    # float32 storage of a clamped alpha_raw may round just past the bound.
    if float(params.values['alpha_raw']) > ALPHA_RAW_MAX + 1e-5:
        raise CheckpointError("Checkpoint '%s' alpha exceeds %s" % (
            path, ALPHA_MAX))
    log.debug("Loaded checkpoint '%s'" % path)
    return params
