# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os

from panos.commands.base import Command
from panos.core.exceptions import InvalidArgument
from panos.core.logger import GetLogger
from panos.dataset.storage import read_dataset
from panos.network.checkpoint import save_checkpoint
from panos.network.params import ModelParams
from panos.training.fit import TrainConfig, fit, write_curve, checkpoint_path

log = GetLogger(__name__)

MODEL = 'model.pnsw'
CURVE = 'curve.csv'
CHECKPOINTS = 'checkpoints'

SECTIONS = ('network', 'train')


def train(config, out, dataset, seed=None):
    """Fit the model on a dataset file.

    Writes the final checkpoint, interval checkpoints and the training curve.

    Args:
        config (Config): Loaded configuration.
        out (str): Output directory.
        dataset (str): Dataset written by collect.
        seed (int): Overrides train.seed (optional).

    Returns path of the final checkpoint.
    """
    train_config = TrainConfig.from_config(config, seed)
    params = ModelParams.from_config(config)
    sequences = read_dataset(dataset)
    if not sequences:
        raise InvalidArgument("Dataset '%s' holds no sequences" % dataset)

    with Command('train', config, out, SECTIONS) as command:
        manifest = command.manifest
        manifest.add_input(dataset)
        manifest.seed('train', train_config.seed)
        manifest.seed('tokenizer', params.meta['tokenizer_seed'])
        manifest.seed('params', params.meta['param_seed'])

        checkpoints = os.path.join(out, CHECKPOINTS)
        os.makedirs(checkpoints, exist_ok=True)
        params, curve = fit(sequences, train_config, params, checkpoints)
        for epoch, _ in curve:
            if (epoch % train_config.checkpoint_interval == 0 or
                    epoch == train_config.epochs):
                manifest.add_output(checkpoint_path(checkpoints, epoch))

        write_curve(curve, command.path(CURVE))
        model = save_checkpoint(params, command.path(MODEL))
        manifest.extra['sequences'] = len(sequences)
        manifest.extra['final'] = dict(zip(
            ('velocity_loss', 'slip_loss', 'alpha', 'total'),
            curve[-1][1].as_row()))
        log.info('Trained on %s sequences, final %r' % (len(sequences),
                                                         curve[-1][1]))
    return model
