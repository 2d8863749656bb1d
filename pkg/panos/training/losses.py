# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.core.exceptions import InvalidArgument

SLIP_SCOPES = ('selected', 'batch')


def clamped_total(velocity_loss, slip_loss, alpha):
    """max(0, velocity_loss - alpha * slip_loss)."""
    return max(0.0, velocity_loss - alpha * slip_loss)


class LossBreakdown(object):
    __slots__ = ('velocity_loss', 'slip_loss', 'alpha', 'total')

    def __init__(self, velocity_loss, slip_loss, alpha):
        if velocity_loss < 0:
            raise InvalidArgument('velocity_loss must be >= 0')
        if not 0 <= slip_loss <= 1:
            raise InvalidArgument('slip_loss must be in [0, 1]')
        self.velocity_loss = float(velocity_loss)
        self.slip_loss = float(slip_loss)
        self.alpha = float(alpha)
        self.total = clamped_total(self.velocity_loss, self.slip_loss,
                                   self.alpha)

    @property
    def clamped(self):
        return self.velocity_loss - self.alpha * self.slip_loss <= 0

    def as_row(self):
        return (self.velocity_loss, self.slip_loss, self.alpha, self.total)

    def __repr__(self):
        return ('LossBreakdown(velocity=%.6f, slip=%.6f, alpha=%.6f,'
                ' total=%.6f)' % self.as_row())


def compute_losses(traces, sequences, alpha, slip_sequences=None):
    """Velocity, slip and clamped total loss over a selection.

    Args:
        traces (list): ForwardTrace of the selected sequences.
        sequences (list): Selected sequences, aligned with traces.
        alpha (float): Slip penalty weight.
        slip_sequences (list): Sequences for the slip mean when it is taken
            over more than the selection (optional).

    Returns LossBreakdown.
    """
    if len(traces) == 0:
        raise InvalidArgument('empty selection')
    if len(traces) != len(sequences):
        raise InvalidArgument('traces not aligned with sequences')
    if slip_sequences is None:
        slip_sequences = sequences

    velocity_loss = 0.0
    for trace, sequence in zip(traces, sequences):
        velocity_loss += (trace.v_hat - float(sequence.v_applied)) ** 2
    velocity_loss /= len(traces)

    slip_loss = 0.0
    for sequence in slip_sequences:
        slip_loss += float(sequence.mean_slip)
    slip_loss /= len(slip_sequences)

    return LossBreakdown(velocity_loss, slip_loss, alpha)
