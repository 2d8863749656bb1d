# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument
from panos.sim.world import D_P

N_V = 16
D_V = 64
PATCH = 16
PATCH_DIM = PATCH * PATCH * 3
ALPHA_MAX = 10.0

CONFIDENCE_MODES = ('select', 'weighted')

# Trainable parameters in gradient, update and checkpoint order.
TRAINABLE = ('enc_w1', 'enc_b1', 'enc_w2', 'enc_b2', 'query',
             'head_w1', 'head_b1', 'head_w2', 'head_b2', 'alpha_raw')

BUFFERS = ('proprio_mean', 'proprio_scale')


def softplus(x):
    return np.logaddexp(0.0, x)


def softplus_inverse(y):
    """alpha_raw giving softplus(alpha_raw) = y, y > 0."""
    return float(y + np.log(-np.expm1(-y)))


def sigmoid(x):
    return 0.5 * (1.0 + np.tanh(0.5 * x))


ALPHA_RAW_MAX = softplus_inverse(ALPHA_MAX)


def _uniform(rng, fan_in, shape):
    bound = 1.0 / np.sqrt(fan_in)
    return rng.uniform(-bound, bound, shape)


def make_tokenizer(seed):
    """Frozen patch projection (768 -> 64), float32, read-only."""
    rng = np.random.default_rng(seed)
    projection = _uniform(rng, PATCH_DIM, (PATCH_DIM, D_V)).astype(np.float32)
    projection.flags.writeable = False
    return projection


class ModelParams(object):
    """Model weights.

    The tokenizer projection is frozen and never receives gradients. The
    proprio encoder is two dense layers (d_P -> encoder_hidden -> d_P, tanh
    between), the query maps encoder features to token space and the
    velocity head is d_v -> head_hidden -> 1 with a softplus output.
    ``proprio_mean``/``proprio_scale`` normalize encoder inputs and are not
    trained.

    Attributes:
        tokenizer (ndarray): (768, 64) float32.
        values (dict): Trainable arrays by name, see :data:`TRAINABLE`.
        buffers (dict): Normalization arrays by name.
        meta (dict): Seeds, dims, confidence mode and config hash.
    """
    __slots__ = ('tokenizer', 'values', 'buffers', 'meta')

    def __init__(self, tokenizer, values, buffers, meta):
        self.tokenizer = tokenizer
        self.values = values
        self.buffers = buffers
        self.meta = meta

    @classmethod
    def initialize(cls, tokenizer_seed, param_seed, encoder_hidden=60,
                   head_hidden=32, confidence_mode='select', alpha_init=0.1,
                   config_hash=''):
        """Seeded fan-in uniform initialization."""
        if tokenizer_seed == param_seed:
            raise InvalidArgument('tokenizer and parameter seeds must differ')
        if encoder_hidden < 1 or head_hidden < 1:
            raise InvalidArgument('hidden sizes must be >= 1')
        if confidence_mode not in CONFIDENCE_MODES:
            raise InvalidArgument("confidence_mode must be one of %s" %
                                  ', '.join(CONFIDENCE_MODES))
        if not 0 < alpha_init <= ALPHA_MAX:
            raise InvalidArgument('alpha_init must be in (0, %s]' % ALPHA_MAX)

        rng = np.random.default_rng(param_seed)
        values = {
            'enc_w1': _uniform(rng, D_P, (encoder_hidden, D_P)),
            'enc_b1': _uniform(rng, D_P, encoder_hidden),
            'enc_w2': _uniform(rng, encoder_hidden, (D_P, encoder_hidden)),
            'enc_b2': _uniform(rng, encoder_hidden, D_P),
            'query': _uniform(rng, D_P, (D_V, D_P)),
            'head_w1': _uniform(rng, D_V, (head_hidden, D_V)),
            'head_b1': _uniform(rng, D_V, head_hidden),
            'head_w2': _uniform(rng, head_hidden, head_hidden),
            'head_b2': np.array(0.0),
            'alpha_raw': np.array(softplus_inverse(alpha_init)),
        }
        buffers = {'proprio_mean': np.zeros(D_P),
                   'proprio_scale': np.ones(D_P)}
        meta = {'tokenizer_seed': int(tokenizer_seed),
                'param_seed': int(param_seed),
                'n_v': N_V, 'd_v': D_V, 'd_p': D_P,
                'encoder_hidden': int(encoder_hidden),
                'head_hidden': int(head_hidden),
                'confidence_mode': confidence_mode,
                'config_hash': config_hash}
        return cls(make_tokenizer(tokenizer_seed), values, buffers, meta)

    @classmethod
    def from_config(cls, config, config_hash=None):
        """Initialize from [network] and train.alpha_init."""
        if config_hash is None:
            config_hash = config.digest('network')
        return cls.initialize(
            config.getseed('network', 'tokenizer_seed'),
            config.getseed('network', 'param_seed'),
            config.getcount('network', 'encoder_hidden'),
            config.getcount('network', 'head_hidden'),
            config.getchoice('network', 'confidence_mode', CONFIDENCE_MODES),
            config.getpositive('train', 'alpha_init'),
            config_hash)

    @property
    def alpha(self):
        return min(float(softplus(self.values['alpha_raw'])), ALPHA_MAX)

    @property
    def confidence_mode(self):
        return self.meta['confidence_mode']

    def fit_normalization(self, proprio):
        """Set encoder input normalization from (n, d_P) samples."""
        proprio = np.asarray(proprio, dtype=np.float64)
        if proprio.ndim != 2 or proprio.shape[1] != D_P or len(proprio) == 0:
            raise InvalidArgument('expected (n, %s) proprio samples' % D_P)
        std = proprio.std(axis=0)
        self.buffers['proprio_mean'] = proprio.mean(axis=0)
        self.buffers['proprio_scale'] = np.where(std > 1e-6, std, 1.0)

    def copy(self):
        return ModelParams(self.tokenizer,
                           {k: v.copy() for k, v in self.values.items()},
                           {k: v.copy() for k, v in self.buffers.items()},
                           dict(self.meta))

    def is_finite(self):
        arrays = list(self.values.values()) + list(self.buffers.values())
        return all(np.isfinite(v).all() for v in arrays)

    def __eq__(self, other):
        if not isinstance(other, ModelParams):
            return False
        return (self.meta == other.meta and
                self.tokenizer.tobytes() == other.tokenizer.tobytes() and
                all(np.array_equal(self.values[k], other.values[k])
                    for k in TRAINABLE) and
                all(np.array_equal(self.buffers[k], other.buffers[k])
                    for k in BUFFERS))
