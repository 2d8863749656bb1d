# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os

import numpy as np
import pytest
from pytest import raises

from panos.core.exceptions import (InvalidArgument, NumericFailure,
                                   TrainingAborted)
from panos.dataset.batch import MiniBatch
from panos.dataset.sequence import Sequence
from panos.network import forward, tokenize_image, load_checkpoint
from panos.network.model import ForwardTrace
from panos.network.params import TRAINABLE, ALPHA_MAX, ALPHA_RAW_MAX, sigmoid
from panos.sim.render import render_observation
from panos.sim.terrain import make_terrain
from panos.training import (LossBreakdown, compute_losses, clamped_total,
                            evaluate_batch, backward, loss_and_gradients,
                            Adam, TrainConfig, Trainer, fit, write_curve,
                            read_curve)
from panos.training.fit import checkpoint_path, CURVE_HEADER

from tests.fixtures import random_sequence, random_sequences, small_params

parametrize = pytest.mark.parametrize


def perturbed(params, name, index, delta):
    params = params.copy()
    values = params.values[name].copy()
    values.reshape(-1)[index] += delta
    params.values[name] = values
    return params


def total(batch, params, tokens, scope):
    return evaluate_batch(batch, params, 0.5, scope, tokens)[2].total


def train_config(**kwargs):
    settings = dict(epochs=1, batch_size=4, learning_rate=1e-3, seed=3,
                    checkpoint_interval=1)
    settings.update(kwargs)
    return TrainConfig(**settings)


class TestLosses(object):
    @parametrize('velocity,slip,alpha,expected', ((1.0, 0.5, 0.1, 0.95),
                                                  (0.01, 0.5, 1.0, 0.0),
                                                  (0.0, 0.0, 0.1, 0.0)))
    def test_examples(self, velocity, slip, alpha, expected):
        losses = LossBreakdown(velocity, slip, alpha)
        assert losses.total == pytest.approx(expected)

    def test_contract(self):
        rng = np.random.default_rng(0)
        for _ in range(10000):
            velocity = rng.exponential(1.0)
            slip = rng.uniform(0, 1)
            alpha = rng.uniform(0, ALPHA_MAX)
            losses = LossBreakdown(velocity, slip, alpha)
            assert losses.total >= 0.0
            assert losses.total == max(0.0, velocity - alpha * slip)
            assert losses.clamped == (velocity - alpha * slip <= 0)

    def test_invalid(self):
        with raises(InvalidArgument):
            LossBreakdown(-0.1, 0.5, 0.1)
        with raises(InvalidArgument):
            LossBreakdown(0.1, 1.5, 0.1)

    def test_compute_losses(self):
        rng = np.random.default_rng(1)
        sequences = [random_sequence(rng, 0, slip=0.2, v_applied=1.0),
                     random_sequence(rng, 1, slip=0.4, v_applied=2.0)]
        traces = [ForwardTrace(v_hat=1.5), ForwardTrace(v_hat=1.0)]
        losses = compute_losses(traces, sequences, 0.5)
        assert losses.velocity_loss == pytest.approx((0.25 + 1.0) / 2)
        assert losses.slip_loss == pytest.approx(0.3)
        assert losses.total == pytest.approx(0.625 - 0.15)
        with raises(InvalidArgument):
            compute_losses([], [], 0.5)

    def test_clamped_total(self):
        assert clamped_total(0.5, 0.5, 2.0) == 0.0
        assert clamped_total(0.5, 0.1, 1.0) == pytest.approx(0.4)


class TestGradients(object):
    @parametrize('hidden', ((60, 32), (16, 8)))
    @parametrize('mode', ('select', 'weighted'))
    @parametrize('scope', ('selected', 'batch'))
    def test_finite_differences(self, hidden, mode, scope):
        params = small_params(*hidden, mode=mode)
        batch = MiniBatch(random_sequences(8, seed=sum(hidden)), 0)
        params.fit_normalization(np.stack([s.proprio for s in batch]))
        tokens = [tokenize_image(s.image, params) for s in batch]
        traces, selected, losses = evaluate_batch(batch, params, 0.5, scope,
                                                  tokens)
        assert not losses.clamped
        grads = backward(batch, params, traces, selected, losses)

        rng = np.random.default_rng(2)
        h = 1e-5
        for name in TRAINABLE:
            size = params.values[name].size
            if size <= 1024:
                indices = range(size)
            else:
                indices = rng.choice(size, 12, replace=False)
            for index in indices:
                numeric = (total(batch, perturbed(params, name, index, h),
                                 tokens, scope) -
                           total(batch, perturbed(params, name, index, -h),
                                 tokens, scope)) / (2 * h)
                analytic = grads[name].reshape(-1)[index]
                tolerance = 1e-4 * max(abs(analytic), abs(numeric)) + 1e-7
                assert abs(analytic - numeric) <= tolerance, (name, index)

    def test_alpha_gradient(self):
        params = small_params()
        batch = MiniBatch(random_sequences(8, seed=3), 0)
        losses, grads = loss_and_gradients(batch, params)
        expected = -losses.slip_loss * sigmoid(params.values['alpha_raw'])
        assert float(grads['alpha_raw']) == pytest.approx(float(expected))
        assert float(grads['alpha_raw']) < 0

    def test_clamped_batch_has_zero_gradients(self):
        params = small_params()
        rng = np.random.default_rng(4)
        sequences = [random_sequence(rng, i, slip=rng.uniform(0.1, 0.5))
                     for i in range(8)]
        labelled = [Sequence(s.image, s.proprio, forward(s, params).v_hat,
                             s.mean_slip, s.source) for s in sequences]
        losses, grads = loss_and_gradients(MiniBatch(labelled, 0), params)
        assert losses.clamped
        assert losses.total == 0.0
        for name in TRAINABLE:
            assert not grads[name].any()

    def test_batch_slip_scope(self):
        params = small_params()
        batch = MiniBatch(random_sequences(8, seed=5), 0)
        _, _, losses = evaluate_batch(batch, params, 0.5, 'batch')
        assert losses.slip_loss == pytest.approx(
            np.mean([float(s.mean_slip) for s in batch]))
        with raises(InvalidArgument):
            evaluate_batch(batch, params, 0.5, 'everything')

    def test_selection_by_confidence(self):
        params = small_params()
        rng = np.random.default_rng(6)
        slips = [0.5, 0.1, 0.4, 0.05, 0.3, 0.2]
        batch = MiniBatch([random_sequence(rng, i, slip=slip)
                           for i, slip in enumerate(slips)], 0)
        _, selected, _ = evaluate_batch(batch, params, 0.5)
        assert selected == [1, 3, 5]

    def test_numeric_failure(self):
        params = small_params()
        params.values['head_w1'] = np.full_like(params.values['head_w1'],
                                                np.nan)
        with raises(NumericFailure) as e:
            loss_and_gradients(MiniBatch(random_sequences(4), 0), params)
        assert e.value.parameter in TRAINABLE


class TestAdam(object):
    def test_alpha_clamp(self):
        params = small_params()
        params.values['alpha_raw'] = np.array(ALPHA_RAW_MAX - 1e-4)
        grads = {name: np.zeros_like(params.values[name])
                 for name in TRAINABLE}
        grads['alpha_raw'] = np.array(-1.0)
        optimizer = Adam(learning_rate=0.1)
        for _ in range(5):
            optimizer.step(params, grads)
        assert params.alpha <= ALPHA_MAX
        assert params.alpha == pytest.approx(ALPHA_MAX)

    def test_weight_decay(self):
        params = small_params()
        alpha_raw = float(params.values['alpha_raw'])
        grads = {name: np.zeros_like(params.values[name])
                 for name in TRAINABLE}
        Adam(learning_rate=0.01,
             weight_decay={'alpha_raw': 1.0}).step(params, grads)
        assert float(params.values['alpha_raw']) > alpha_raw
        assert np.array_equal(params.values['query'],
                              small_params().values['query'])

    def test_overfit_single_batch(self):
        params = small_params()
        rng = np.random.default_rng(7)
        batch = MiniBatch([random_sequence(rng, i, slip=rng.uniform(0.1, 0.3),
                                           v_applied=1.5)
                           for i in range(8)], 0)
        params.fit_normalization(np.stack([s.proprio for s in batch]))
        trainer = Trainer(params, train_config(learning_rate=1e-3),
                          list(batch))
        totals = [trainer.step(batch).total for _ in range(200)]
        assert totals[-1] < totals[0]
        for before, after in zip(totals, totals[1:]):
            assert after <= before + 1e-9


class TestTrainerStep(object):
    def test_clamped_step_keeps_state(self):
        params = small_params(alpha_init=ALPHA_MAX - 0.01)
        rng = np.random.default_rng(3)
        batch = MiniBatch([random_sequence(rng, i, slip=0.6, v_applied=1.0)
                           for i in range(4)], 0)
        trainer = Trainer(params, train_config(), list(batch))
        before = params.copy()
        losses = trainer.step(batch)
        assert losses.clamped
        assert trainer.optimizer.t == 0
        for name in TRAINABLE:
            assert np.array_equal(params.values[name], before.values[name])


class TestTrainConfig(object):
    @parametrize('kwargs', ({'epochs': 0},
                            {'batch_size': 0},
                            {'learning_rate': 0.0},
                            {'selection_fraction': 0.0},
                            {'selection_fraction': 1.5},
                            {'alpha_weight_decay': 0.0},
                            {'slip_scope': 'all'}))
    def test_invalid(self, kwargs):
        with raises(InvalidArgument):
            TrainConfig(**kwargs)


class TestFit(object):
    def test_one_epoch(self, tmp_path):
        params = small_params()
        tokenizer = params.tokenizer.tobytes()
        params, curve = fit(random_sequences(10), train_config(), params,
                            str(tmp_path))
        assert len(curve) == 1
        epoch, record = curve[0]
        assert epoch == 1
        assert record.total == clamped_total(record.velocity_loss,
                                             record.slip_loss, record.alpha)
        assert params.tokenizer.tobytes() == tokenizer
        loaded = load_checkpoint(checkpoint_path(str(tmp_path), 1), 'test')
        assert np.array_equal(loaded.values['query'],
                              params.values['query'].astype(np.float32))

    def test_checkpoint_interval(self, tmp_path):
        fit(random_sequences(6), train_config(epochs=5,
                                              checkpoint_interval=2),
            small_params(), str(tmp_path))
        assert sorted(os.listdir(str(tmp_path))) == [
            'checkpoint-epoch-0002.pnsw', 'checkpoint-epoch-0004.pnsw',
            'checkpoint-epoch-0005.pnsw']

    def test_deterministic(self):
        sequences = random_sequences(12)
        a, curve_a = fit(sequences, train_config(epochs=3), small_params())
        b, curve_b = fit(sequences, train_config(epochs=3), small_params())
        assert a == b
        assert [r.as_row() for _, r in curve_a] == \
            [r.as_row() for _, r in curve_b]

    def test_empty(self):
        with raises(InvalidArgument):
            fit([], train_config(), small_params())

    def test_aborted(self):
        params = small_params()
        params.values['query'] = np.full_like(params.values['query'], np.nan)
        with raises(TrainingAborted) as e:
            fit(random_sequences(4), train_config(), params)
        assert e.value.checkpoint is None

    def test_learns_terrain_velocity(self):
        rng = np.random.default_rng(8)
        concrete = make_terrain('Concrete', 1)
        gravel = make_terrain('Gravel', 2)
        sequences = []
        for i in range(24):
            sequences.append(Sequence(
                render_observation(concrete, 0.5 * i), rng.normal(0, 1, 60),
                1.0, rng.uniform(0.0, 0.01), (1, i)))
        for i in range(16):
            sequences.append(Sequence(
                render_observation(gravel, 0.5 * i), rng.normal(0, 1, 60),
                2.5, rng.uniform(0.35, 0.45), (2, i)))
        params, _ = fit(sequences, train_config(epochs=60, batch_size=8,
                                                learning_rate=5e-3),
                        small_params())
        predicted = np.mean([forward(s, params).v_hat
                             for s in sequences[:24]])
        assert 0.8 <= predicted <= 1.4
        assert params.alpha <= ALPHA_MAX


class TestCurve(object):
    def test_write_read(self, tmp_path):
        curve = [(1, LossBreakdown(1.0, 0.5, 0.1)),
                 (2, LossBreakdown(0.5, 0.4, 0.2))]
        path = write_curve(curve, str(tmp_path / 'curve.csv'))
        rows = read_curve(path)
        assert len(rows) == 2
        assert list(rows[0]) == list(CURVE_HEADER)
        assert rows[1]['epoch'] == 2.0
        assert rows[0]['total'] == pytest.approx(0.95)
