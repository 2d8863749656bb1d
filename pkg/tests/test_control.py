# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np
import pytest
from pytest import raises

from panos.commands.base import load_config
from panos.control import (FixedVelocity, ReactiveSlip, PanosController,
                           TrialSpec, run_trial, panos_controller,
                           make_controller, trial_from_config)
from panos.control.controllers import ControlInput, SLIP_THRESHOLD
from panos.core.config import Config
from panos.core.exceptions import (InvalidArgument, CheckpointError,
                                   ConfigError)
from panos.dataset.sequence import form_sequences
from panos.network import forward, save_checkpoint
from panos.sim.profiles import SegmentProfile
from panos.sim.rollout import rollout
from panos.sim.terrain import make_terrain, TerrainCourse
from panos.training import TrainConfig, fit

from tests.fixtures import small_params

parametrize = pytest.mark.parametrize


def reactive_trial(duration=10.0, seed=3):
    controller = ReactiveSlip(0.5, 0.2, 2.0, 2.0)
    spec = TrialSpec(controller, make_terrain('Gravel', seed), 6.8, duration,
                     seed)
    return run_trial(spec)


class TestFixedVelocity(object):
    def test_constant_command(self):
        spec = TrialSpec(FixedVelocity(2.0), make_terrain('Gravel', 1), 6.8,
                         30.0, 101)
        log = run_trial(spec)
        assert len(log) == 3000
        assert np.all(log.commanded == 2.0)
        assert log.meta['trial']['controller'] == 'fixed'

    def test_invalid(self):
        with raises(InvalidArgument):
            FixedVelocity(-1.0)
        with raises(InvalidArgument):
            FixedVelocity(1.0, 2.0, 1.0)

    @parametrize('velocity,expected', ((3.5, 2.0), (0.1, 0.2), (1.2, 1.2)))
    def test_clamped_to_limits(self, velocity, expected):
        controller = FixedVelocity(velocity, 0.2, 2.0)
        assert controller.velocity == expected
        assert controller.v_init == expected

    def test_config_limits(self):
        config = load_config(overrides={'control': {'fixed_velocity': '5.0',
                                                    'v_max': '1.5',
                                                    'v_init': '1.5'}})
        controller = make_controller('fixed', config)
        assert controller.velocity == 1.5


class TestReactiveSlip(object):
    def test_law(self):
        log = reactive_trial()
        assert np.all(log.commanded[:20] == 2.0)
        for i in range(1, len(log)):
            if i % 20 != 0:
                assert log.commanded[i] == log.commanded[i - 1]
                continue
            window = log.slips[max(0, i - 100):i]
            excess = max(0.0, float(np.clip(window.mean(), 0, 1)) -
                         SLIP_THRESHOLD)
            expected = min(max(log.commanded[i - 1] - 0.5 * excess, 0.2), 2.0)
            assert log.commanded[i] == expected
            if excess > 0 and log.commanded[i - 1] > 0.2:
                assert log.commanded[i] < log.commanded[i - 1]

    def test_slows_down_on_gravel(self):
        log = reactive_trial()
        assert log.commanded[-1] < 2.0

    def test_no_slip_holds(self):
        controller = ReactiveSlip(0.5, 0.2, 2.0, 2.0)
        command = controller(ControlInput(None, np.zeros((5, 60)),
                                          np.full((5, 4), 0.1), 1.5))
        assert command == 1.5

    def test_deterministic(self):
        assert reactive_trial(5.0) == reactive_trial(5.0)

    def test_invalid(self):
        with raises(InvalidArgument):
            ReactiveSlip(0.0)
        with raises(InvalidArgument):
            ReactiveSlip(0.5, 1.0, 0.5)
        with raises(InvalidArgument):
            ReactiveSlip(0.5, 0.2, 2.0, 3.0)


class TestPanosController(object):
    def test_clamped(self):
        params = small_params()
        rng = np.random.default_rng(0)
        for _ in range(200):
            v = panos_controller(params, rng.uniform(0, 1, (64, 64, 3)),
                                 rng.normal(0, 1, (100, 60)))
            assert 0.2 <= v <= 2.0

    @pytest.mark.parametrize('bias,expected', ((20.0, 2.0), (-20.0, 0.2)))
    def test_limits(self, bias, expected):
        params = small_params()
        params.values['head_b2'] = np.array(bias)
        image = np.zeros((64, 64, 3))
        assert panos_controller(params, image, np.ones((10, 60))) == expected

    def test_pure(self):
        params = small_params()
        rng = np.random.default_rng(1)
        image = rng.uniform(0, 1, (64, 64, 3))
        window = rng.normal(0, 1, (100, 60))
        assert panos_controller(params, image, window) == \
            panos_controller(params, image, window)

    def test_empty_window(self):
        with raises(InvalidArgument):
            panos_controller(small_params(), np.zeros((64, 64, 3)),
                             np.zeros((0, 60)))

    def test_trial(self):
        controller = PanosController(small_params())
        spec = TrialSpec(controller, make_terrain('Grass', 2), 1.0, 3.0, 7)
        log = run_trial(spec)
        assert log.commanded[0] == 2.0
        assert log.commanded.min() >= 0.2
        assert log.commanded.max() <= 2.0
        assert log == run_trial(spec)


class TestTrial(object):
    def test_control_rate(self):
        spec = TrialSpec(FixedVelocity(), make_terrain('Grass', 1), 1.0,
                         1.0, 1, control_rate=3.0)
        with raises(InvalidArgument):
            run_trial(spec)

    def test_invalid_spec(self):
        with raises(InvalidArgument):
            TrialSpec(FixedVelocity(), make_terrain('Grass', 1), 1.0, 0.0, 1)

    def test_from_config(self):
        spec = trial_from_config(Config())
        assert isinstance(spec.controller, FixedVelocity)
        assert spec.terrain.first.name == 'Gravel'
        assert spec.payload_mass == 6.8
        assert spec.seed == 101

    def test_mixed_course(self):
        config = load_config(overrides={'trial': {'terrain': 'Mixed'}})
        spec = trial_from_config(config, seed=5)
        assert isinstance(spec.terrain, TerrainCourse)
        assert [t.name for t, _ in spec.terrain.segments] == [
            'Concrete', 'Grass', 'Gravel', 'PebbleSidewalk']
        assert spec.describe()['terrain'] == 'Mixed'

    def test_unknown_terrain(self):
        config = load_config(overrides={'trial': {'terrain': 'Ice'}})
        with raises(ConfigError) as e:
            trial_from_config(config)
        assert e.value.key == 'trial.terrain'

    def test_panos_needs_checkpoint(self):
        with raises(InvalidArgument):
            make_controller('panos', Config())

    def test_checkpoint_hash(self, tmp_path):
        path = save_checkpoint(small_params(), str(tmp_path / 'm.pnsw'))
        with raises(CheckpointError):
            make_controller('panos', Config(), checkpoint=path)

    def test_checkpoint_matching_config(self, tmp_path):
        config = Config()
        params = small_params()
        params.meta['config_hash'] = config.digest('network')
        path = save_checkpoint(params, str(tmp_path / 'm.pnsw'))
        controller = make_controller('panos', config, checkpoint=path)
        assert isinstance(controller, PanosController)


class TestTrainedBehaviour(object):
    def test_slower_on_gravel(self):
        sequences = {}
        for index, name in enumerate(('Concrete', 'Grass', 'Gravel',
                                      'PebbleSidewalk')):
            log = rollout(make_terrain(name, index),
                          SegmentProfile(30.0, 50 + index), 1.0, 30.0,
                          50 + index)
            sequences[name] = form_sequences(log, 1.0)
        everything = [s for group in sequences.values() for s in group]
        params, _ = fit(everything,
                        TrainConfig(epochs=40, batch_size=16,
                                    learning_rate=5e-3),
                        small_params())

        def mean_command(name):
            return np.mean([forward(s, params).v_hat
                            for s in sequences[name]])

        assert mean_command('Gravel') < mean_command('Concrete')
