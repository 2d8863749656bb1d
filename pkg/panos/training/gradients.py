# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Reverse-mode gradients of the clamped total loss.

Per-sequence contributions are accumulated in selection order so a batch
always reduces in the same order.
"""
import math

import numpy as np

from panos.core.exceptions import InvalidArgument, NumericFailure
from panos.network.model import forward, select, selection_size
from panos.network.params import TRAINABLE, D_V, sigmoid
from panos.training.losses import compute_losses, SLIP_SCOPES


def zero_gradients(params):
    return {name: np.zeros_like(params.values[name], dtype=np.float64)
            for name in TRAINABLE}


def evaluate_batch(batch, params, selection_fraction=0.5,
                   slip_scope='selected', tokens=None):
    """Forward, select and score a mini-batch.

    Args:
        batch (MiniBatch/list): Sequences.
        params (ModelParams): Weights.
        selection_fraction (float): Share of the batch selected.
        slip_scope (str): 'selected' or 'batch' slip mean.
        tokens (list): Visual tokens aligned with batch (optional).

    Returns tuple (traces, selected indices, LossBreakdown).
    """
    if slip_scope not in SLIP_SCOPES:
        raise InvalidArgument('slip_scope must be one of %s' %
                              ', '.join(SLIP_SCOPES))
    sequences = list(batch)
    if tokens is None:
        tokens = [None] * len(sequences)
    traces = [forward(sequence, params, token)
              for sequence, token in zip(sequences, tokens)]
    K = selection_size(len(sequences), selection_fraction)
    selected = select(sequences, traces, K)
    chosen = [sequences[i] for i in selected]
    losses = compute_losses([traces[i] for i in selected], chosen,
                            params.alpha,
                            sequences if slip_scope == 'batch' else None)
    return traces, selected, losses


def backward(batch, params, traces, selected, losses):
    """Gradients of the total loss for every trainable parameter.

    The frozen tokenizer and normalization buffers get none. A clamped total
    has all gradients exactly zero.

    Raises:
        NumericFailure: a gradient is not finite, naming the parameter.

    Returns dict name -> ndarray.
    """
    grads = zero_gradients(params)
    if losses.clamped:
        return grads

    v = params.values
    sequences = list(batch)
    n = len(selected)
    weighted = params.confidence_mode == 'weighted'
    scale = 1.0 / math.sqrt(D_V)

    for i in selected:
        trace = traces[i]
        sequence = sequences[i]

        # Velocity loss through the softplus head.
        d_v_hat = 2.0 * (trace.v_hat - float(sequence.v_applied)) / n
        d_logit = d_v_hat * sigmoid(trace.head_logit)
        grads['head_w2'] += d_logit * trace.head_hidden
        grads['head_b2'] += d_logit
        d_hidden = d_logit * v['head_w2']
        d_pre = d_hidden * (1.0 - trace.head_hidden ** 2)
        grads['head_w1'] += np.outer(d_pre, trace.head_input)
        grads['head_b1'] += d_pre
        d_context = v['head_w1'].T @ d_pre
        if weighted:
            d_context = d_context * trace.confidence

        # Attention softmax over tokens.
        tokens = trace.visual_tokens
        a = trace.attention_weights
        d_a = tokens @ d_context
        d_logits = a * (d_a - a @ d_a)
        d_query = scale * (tokens.T @ d_logits)
        grads['query'] += np.outer(d_query, trace.proprio_features)
        d_features = v['query'].T @ d_query

        # Proprio encoder.
        grads['enc_w2'] += np.outer(d_features, trace.encoder_hidden)
        grads['enc_b2'] += d_features
        d_hidden = v['enc_w2'].T @ d_features
        d_pre = d_hidden * (1.0 - trace.encoder_hidden ** 2)
        grads['enc_w1'] += np.outer(d_pre, trace.normalized)
        grads['enc_b1'] += d_pre

    grads['alpha_raw'] += -losses.slip_loss * sigmoid(v['alpha_raw'])

    for name in TRAINABLE:
        if not np.isfinite(grads[name]).all():
            raise NumericFailure(name)

    return grads


def loss_and_gradients(batch, params, selection_fraction=0.5,
                       slip_scope='selected', tokens=None):
    """evaluate_batch then backward. Returns (LossBreakdown, grads)."""
    traces, selected, losses = evaluate_batch(batch, params,
                                              selection_fraction,
                                              slip_scope, tokens)
    return losses, backward(batch, params, traces, selected, losses)
