# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import math

import numpy as np

from panos.core.exceptions import InvalidArgument
from panos.network.params import N_V, D_V, PATCH, softplus
from panos.sim import constants as C
from panos.sim.world import D_P

_IMAGE_SHAPE = (C.IMAGE_SIZE, C.IMAGE_SIZE, 3)
_GRID = C.IMAGE_SIZE // PATCH


class ForwardTrace(object):
    """Intermediate values of one forward pass.

    Public fields follow the model stages. ``normalized``, ``encoder_hidden``,
    ``query``, ``head_hidden`` and ``head_logit`` are kept for backward.
    """
    __slots__ = ('visual_tokens', 'proprio_features', 'attention_weights',
                 'context', 'confidence', 'v_hat', 'score',
                 'normalized', 'encoder_hidden', 'query', 'head_input',
                 'head_hidden', 'head_logit')

    def __init__(self, **kwargs):
        for key in self.__slots__:
            setattr(self, key, kwargs.get(key))


def patches(image):
    """(16, 768) row-major 16x16x3 patches, left to right, top to bottom."""
    image = np.asarray(image)
    if image.shape != _IMAGE_SHAPE:
        raise InvalidArgument('image must be %sx%sx3, got %s' % (
            C.IMAGE_SIZE, C.IMAGE_SIZE, image.shape))
    grid = image.reshape(_GRID, PATCH, _GRID, PATCH, 3).swapaxes(1, 2)
    return grid.reshape(N_V, PATCH * PATCH * 3).astype(np.float64)


def tokenize_image(image, params):
    """Visual tokens (16, 64) through the frozen projection."""
    return patches(image) @ params.tokenizer.astype(np.float64)


def _encode(proprio, params):
    proprio = np.asarray(proprio, dtype=np.float64)
    if proprio.shape != (D_P,):
        raise InvalidArgument('proprio must have length %s' % D_P)
    if not np.isfinite(proprio).all():
        raise InvalidArgument('proprio must be finite')
    v = params.values
    normalized = ((proprio - params.buffers['proprio_mean']) /
                  params.buffers['proprio_scale'])
    hidden = np.tanh(v['enc_w1'] @ normalized + v['enc_b1'])
    features = v['enc_w2'] @ hidden + v['enc_b2']
    return normalized, hidden, features


def encode_proprio(proprio, params):
    """Proprio features of the same size d_P as the input."""
    return _encode(proprio, params)[2]


def _attend(proprio_features, visual_tokens, params):
    visual_tokens = np.asarray(visual_tokens, dtype=np.float64)
    if visual_tokens.shape != (N_V, D_V):
        raise InvalidArgument('visual tokens must be %sx%s' % (N_V, D_V))
    query = params.values['query'] @ proprio_features
    logits = visual_tokens @ query / math.sqrt(D_V)
    logits = logits - logits.max()
    weights = np.exp(logits)
    weights = weights / weights.sum()
    context = weights @ visual_tokens
    return query, weights, context


def attend(proprio_features, visual_tokens, params):
    """Scaled dot-product attention of the proprio query over tokens.

    Returns tuple (attention weights (16,), context (64,)).
    """
    _, weights, context = _attend(proprio_features, visual_tokens, params)
    return weights, context


def confidence(mean_slip):
    """1 - slip. Accepts a Sequence or a slip value."""
    slip = getattr(mean_slip, 'mean_slip', mean_slip)
    if not 0 <= slip <= 1:
        raise InvalidArgument('slip must be in [0, 1], got %s' % slip)
    return 1.0 - float(slip)


def predict(image, proprio, slip, params, visual_tokens=None):
    """Forward pass on raw inputs.

    Args:
        image (ndarray): 64x64x3 observation.
        proprio (ndarray): Flattened d_P proprioception.
        slip (float): Mean slip, sets confidence.
        params (ModelParams): Weights.
        visual_tokens (ndarray): Precomputed tokens of image (optional).

    Returns ForwardTrace.
    """
    if visual_tokens is None:
        visual_tokens = tokenize_image(image, params)
    conf = confidence(slip)
    normalized, encoder_hidden, features = _encode(proprio, params)
    query, weights, context = _attend(features, visual_tokens, params)

    head_input = context
    if params.confidence_mode == 'weighted':
        head_input = conf * context

    v = params.values
    head_hidden = np.tanh(v['head_w1'] @ head_input + v['head_b1'])
    head_logit = float(v['head_w2'] @ head_hidden + v['head_b2'])
    v_hat = float(softplus(head_logit))

    return ForwardTrace(visual_tokens=visual_tokens,
                        proprio_features=features,
                        attention_weights=weights,
                        context=context,
                        confidence=conf,
                        v_hat=v_hat,
                        score=conf,
                        normalized=normalized,
                        encoder_hidden=encoder_hidden,
                        query=query,
                        head_input=head_input,
                        head_hidden=head_hidden,
                        head_logit=head_logit)


def forward(sequence, params, visual_tokens=None):
    """ForwardTrace for a Sequence."""
    return predict(sequence.image, sequence.proprio, sequence.mean_slip,
                   params, visual_tokens)


def select(batch, traces, K):
    """Indices of the K highest scores, ties to the lower index.

    Returns sorted list of int.
    """
    if K < 1:
        raise InvalidArgument('K must be >= 1, got %s' % K)
    if len(traces) != len(batch):
        raise InvalidArgument('traces not aligned with batch')
    order = sorted(range(len(traces)), key=lambda i: (-traces[i].score, i))
    return sorted(order[:K])


def selection_size(n, selection_fraction):
    """K = ceil(selection_fraction * n)."""
    if not 0 < selection_fraction <= 1:
        raise InvalidArgument('selection_fraction must be in (0, 1]')
    return max(1, int(math.ceil(selection_fraction * n - 1e-12)))
