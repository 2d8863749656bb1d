# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os
import csv

import numpy as np

from panos.core.logger import GetLogger
from panos.core.exceptions import (InvalidArgument, NumericFailure,
                                   TrainingAborted)
from panos.dataset.batch import shuffle_batches
from panos.network.checkpoint import save_checkpoint
from panos.network.model import tokenize_image
from panos.network.params import ModelParams
from panos.training.gradients import evaluate_batch, backward
from panos.training.losses import LossBreakdown, SLIP_SCOPES
from panos.training.optimizer import Adam
from panos.utils.formatting import format_float
from panos.utils.timer import Timer

log = GetLogger(__name__)

CURVE_HEADER = ('epoch', 'velocity_loss', 'slip_loss', 'alpha', 'total')


class TrainConfig(object):
    """Training hyper-parameters.

    Args:
        epochs (int): Passes over the dataset.
        batch_size (int): Mini-batch size B.
        learning_rate (float): Adam step size.
        selection_fraction (float): Share of each batch selected, (0, 1].
        seed (int): Shuffle seed.
        checkpoint_interval (int): Epochs between checkpoints.
        alpha_weight_decay (float): L2 decay on alpha_raw.
        beta1 (float): Adam first moment decay.
        beta2 (float): Adam second moment decay.
        slip_scope (str): Slip loss over 'selected' or whole 'batch'.
    """
    __slots__ = ('epochs', 'batch_size', 'learning_rate',
                 'selection_fraction', 'seed', 'checkpoint_interval',
                 'alpha_weight_decay', 'beta1', 'beta2', 'slip_scope')

    def __init__(self, epochs=200, batch_size=32, learning_rate=1e-3,
                 selection_fraction=0.5, seed=3, checkpoint_interval=50,
                 alpha_weight_decay=1e-3, beta1=0.9, beta2=0.999,
                 slip_scope='selected'):
        if epochs < 1 or batch_size < 1 or checkpoint_interval < 1:
            raise InvalidArgument('epochs, batch_size and'
                                  ' checkpoint_interval must be >= 1')
        if not learning_rate > 0:
            raise InvalidArgument('learning_rate must be > 0')
        if not 0 < selection_fraction <= 1:
            raise InvalidArgument('selection_fraction must be in (0, 1]')
        if not alpha_weight_decay > 0:
            raise InvalidArgument('alpha_weight_decay must be > 0')
        if seed < 0:
            raise InvalidArgument('seed must be >= 0')
        if not (0 < beta1 < 1 and 0 < beta2 < 1):
            raise InvalidArgument('beta1 and beta2 must be in (0, 1)')
        if slip_scope not in SLIP_SCOPES:
            raise InvalidArgument('slip_scope must be one of %s' %
                                  ', '.join(SLIP_SCOPES))
        self.epochs = int(epochs)
        self.batch_size = int(batch_size)
        self.learning_rate = float(learning_rate)
        self.selection_fraction = float(selection_fraction)
        self.seed = int(seed)
        self.checkpoint_interval = int(checkpoint_interval)
        self.alpha_weight_decay = float(alpha_weight_decay)
        self.beta1 = float(beta1)
        self.beta2 = float(beta2)
        self.slip_scope = slip_scope

    @classmethod
    def from_config(cls, config, seed=None):
        """From the [train] section; seed overrides train.seed."""
        return cls(epochs=config.getcount('train', 'epochs'),
                   batch_size=config.getcount('train', 'batch_size'),
                   learning_rate=config.getpositive('train', 'learning_rate'),
                   selection_fraction=config.getfraction(
                       'train', 'selection_fraction'),
                   seed=(config.getseed('train', 'seed')
                         if seed is None else seed),
                   checkpoint_interval=config.getcount(
                       'train', 'checkpoint_interval'),
                   alpha_weight_decay=config.getpositive(
                       'train', 'alpha_weight_decay'),
                   beta1=config.getfraction('train', 'beta1'),
                   beta2=config.getfraction('train', 'beta2'),
                   slip_scope=config.getchoice('train', 'slip_scope',
                                               SLIP_SCOPES))

    def optimizer(self):
        return Adam(self.learning_rate, self.beta1, self.beta2,
                    {'alpha_raw': self.alpha_weight_decay})


class Trainer(object):
    """Batch level training on precomputed visual tokens.

    The tokenizer is frozen, so every image is tokenized once.
    """
    def __init__(self, params, train_config, sequences):
        self.params = params
        self.config = train_config
        self.optimizer = train_config.optimizer()
        self.tokens = {id(sequence): tokenize_image(sequence.image, params)
                       for sequence in sequences}

    def batch_tokens(self, batch):
        return [self.tokens.get(id(sequence)) for sequence in batch]

    def step(self, batch):
        """One update on batch. Returns LossBreakdown before the update.

        A clamped batch leaves the parameters and the optimizer moments
        untouched, so the total on that batch stays at zero.
        """
        traces, selected, losses = evaluate_batch(
            batch, self.params, self.config.selection_fraction,
            self.config.slip_scope, self.batch_tokens(batch))
        if losses.clamped:
            return losses
        grads = backward(batch, self.params, traces, selected, losses)
        self.optimizer.step(self.params, grads)
        if not self.params.is_finite():
            raise NumericFailure(next(name for name, value
                                      in self.params.values.items()
                                      if not np.isfinite(value).all()))
        return losses


def checkpoint_path(directory, epoch):
    return os.path.join(directory, 'checkpoint-epoch-%04d.pnsw' % epoch)


def fit(sequences, config, params=None, checkpoint_dir=None):
    """Train the model on sequences.

    Args:
        sequences (list): Training Sequences, nonempty.
        config (TrainConfig/Config): Hyper-parameters. A Config also
            provides the network settings when params is omitted.
        params (ModelParams): Initial weights (optional with Config).
        checkpoint_dir (str): Directory for interval checkpoints (optional).

    Raises:
        TrainingAborted: numeric failure, carrying the last good checkpoint.

    Returns tuple (ModelParams, list of (epoch, LossBreakdown)).
    """
    if len(sequences) == 0:
        raise InvalidArgument('empty dataset')
    if isinstance(config, TrainConfig):
        train_config = config
        if params is None:
            raise InvalidArgument('params required with a TrainConfig')
    else:
        train_config = TrainConfig.from_config(config)
        if params is None:
            params = ModelParams.from_config(config)

    params.fit_normalization(np.stack([s.proprio for s in sequences]))
    trainer = Trainer(params, train_config, sequences)
    epoch_seeds = np.random.default_rng(train_config.seed).integers(
        0, 2 ** 63 - 1, size=train_config.epochs)

    curve = []
    last_checkpoint = None
    for epoch in range(1, train_config.epochs + 1):
        with Timer() as elapsed:
            batches = shuffle_batches(sequences, train_config.batch_size,
                                      int(epoch_seeds[epoch - 1]))
            sums = np.zeros(2)
            try:
                for batch in batches:
                    losses = trainer.step(batch)
                    sums += (losses.velocity_loss, losses.slip_loss)
            except NumericFailure as e:
                log.error(str(e))
                raise TrainingAborted("%s at epoch %s" % (e, epoch),
                                      last_checkpoint) from e

        velocity_loss, slip_loss = sums / len(batches)
        record = LossBreakdown(velocity_loss, slip_loss, params.alpha)
        curve.append((epoch, record))
        log.info('Epoch %s/%s %r' % (epoch, train_config.epochs, record),
                 timer=elapsed())

        if checkpoint_dir is not None and (
                epoch % train_config.checkpoint_interval == 0 or
                epoch == train_config.epochs):
            last_checkpoint = save_checkpoint(
                params, checkpoint_path(checkpoint_dir, epoch))

    return params, curve


def write_curve(curve, path):
    """Training curve CSV, one row per epoch. Returns path."""
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(CURVE_HEADER)
        for epoch, record in curve:
            writer.writerow([epoch] + [format_float(value, 9)
                                       for value in record.as_row()])
    return path


def read_curve(path):
    """Rows of a curve CSV as list of dict with float values."""
    with open(path, newline='') as f:
        return [{key: float(value) for key, value in row.items()}
                for row in csv.DictReader(f)]
