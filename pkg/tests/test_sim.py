# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np
import pytest
from pytest import raises

from panos.core.exceptions import InvalidArgument
from panos.sim import constants as C
from panos.sim.profiles import ConstantProfile, SegmentProfile
from panos.sim.render import render_observation
from panos.sim.rollout import rollout, steps_per_frame
from panos.sim.terrain import (TerrainClass, TerrainSpec, TerrainCourse,
                               make_terrain, make_course)
from panos.sim.world import D_P, SimState, step, HIP_POSITION, FOOT_CONTACT

parametrize = pytest.mark.parametrize


def mean_slip(terrain, v_cmd, payload, steps=1000, seed=5):
    state = SimState(terrain, seed)
    total = 0.0
    for _ in range(steps):
        _, proprio, _, _ = step(state, v_cmd, payload)
        total += proprio.foot_slip.mean()
    return total / steps


@pytest.fixture(scope='module')
def gravel_log():
    return rollout(make_terrain('Gravel', 3), ConstantProfile(2.0), 6.8,
                   60.0, 17)


class TestTerrain(object):
    @parametrize('name', sorted(C.TERRAIN_TABLE))
    def test_make_terrain(self, name):
        row = C.TERRAIN_TABLE[name]
        terrain = make_terrain(name, 42)
        assert terrain.name == name
        assert (terrain.friction_coeff, terrain.roughness,
                terrain.compliance) == row
        assert terrain.visual_seed == 42
        assert make_terrain(name, 42) == terrain

    def test_unknown_class(self):
        with raises(InvalidArgument):
            make_terrain('Ice', 1)

    @parametrize('args', ((0.0, 0.01, 0.5),
                          (1.1, 0.01, 0.5),
                          (0.5, -0.01, 0.5),
                          (0.5, 0.01, 1.5)))
    def test_invalid_spec(self, args):
        with raises(InvalidArgument):
            TerrainSpec(TerrainClass.Grass, *args, visual_seed=1)

    def test_dict_round_trip(self):
        terrain = make_terrain('Grass', 2 ** 63 + 5)
        assert TerrainSpec.from_dict(terrain.to_dict()) == terrain

    def test_course(self):
        course = make_course(['Concrete', 'Gravel'], 10.0, 3)
        assert course.terrain_at(0.0).name == 'Concrete'
        assert course.terrain_at(9.99).name == 'Concrete'
        assert course.terrain_at(10.0).name == 'Gravel'
        assert course.terrain_at(500.0).name == 'Gravel'
        pieces = course.spans(9.0, 11.0)
        assert [(t.name, lo, hi) for t, lo, hi in pieces] == [
            ('Concrete', 9.0, 10.0), ('Gravel', 10.0, 11.0)]
        assert TerrainCourse.from_list(course.to_list()) == course

    def test_empty_course(self):
        with raises(InvalidArgument):
            TerrainCourse([])


class TestWorld(object):
    def test_proprio_layout(self):
        state = SimState(make_terrain('Grass', 1), 1)
        _, proprio, imus, _ = step(state, 1.0, 1.0)
        vector = proprio.flatten()
        assert vector.shape == (D_P,)
        assert np.array_equal(vector[HIP_POSITION], proprio.hip_position)
        assert set(vector[FOOT_CONTACT]) <= {0.0, 1.0}
        assert [imu.imu_id for imu in imus] == list(C.IMU_IDS)
        assert all(imu.accel.shape == (3,) for imu in imus)

    def test_robot_at_rest(self):
        state = SimState(make_terrain('Gravel', 1), 5)
        for _ in range(50):
            _, proprio, imus, achieved = step(state, 0.0, 6.8)
            assert achieved == 0.0
            assert not proprio.foot_slip.any()
            assert np.abs(proprio.joint_velocity).max() < 1e-6
            for imu in imus:
                assert abs(imu.accel[2] - C.G) < 0.06
                assert np.abs(imu.accel[:2]).max() < 0.06
        assert state.position == 0.0

    def test_ideal_traction(self):
        terrain = TerrainSpec('Concrete', 1.0, 0.0, 0.05, 3)
        state = SimState(terrain, 9)
        slips = []
        achieved = []
        for _ in range(1000):
            _, proprio, _, v = step(state, 1.0, 0.0)
            slips.append(proprio.foot_slip.mean())
            achieved.append(v)
        assert np.mean(slips) < 0.01
        assert abs(np.mean(achieved) - 1.0) < 0.01

    def test_slip_bounds(self):
        state = SimState(make_terrain('Gravel', 1), 2)
        for _ in range(500):
            _, proprio, _, _ = step(state, 2.5, 10.0)
            assert proprio.foot_slip.min() >= 0.0
            assert proprio.foot_slip.max() <= 1.0

    @parametrize('v_cmd,payload,dt', ((-0.1, 0.0, 0.01),
                                      (1.0, -1.0, 0.01),
                                      (1.0, 0.0, 0.0),
                                      (1.0, 0.0, 0.2)))
    def test_invalid_step(self, v_cmd, payload, dt):
        state = SimState(make_terrain('Grass', 1), 1)
        with raises(InvalidArgument):
            step(state, v_cmd, payload, dt)

    def test_slip_grows_with_payload(self):
        terrain = make_terrain('Gravel', 1)
        slips = [mean_slip(terrain, 2.0, payload)
                 for payload in (0.0, 2.0, 4.0, 6.8, 10.0)]
        assert slips == sorted(slips)
        assert slips[-1] > slips[0]

    def test_slip_grows_with_velocity(self):
        terrain = make_terrain('Gravel', 1)
        slips = [mean_slip(terrain, v, 1.0)
                 for v in (0.5, 1.0, 1.5, 2.0, 2.5)]
        assert slips == sorted(slips)

    def test_slip_grows_as_friction_drops(self):
        slips = [mean_slip(TerrainSpec('Grass', friction, 0.01, 0.5, 1),
                           2.0, 1.0)
                 for friction in (0.9, 0.7, 0.5, 0.3, 0.1)]
        assert slips == sorted(slips)

    def test_terrain_ordering(self):
        slips = [mean_slip(make_terrain(name, 1), 2.0, 1.0)
                 for name in ('Concrete', 'Grass', 'Gravel')]
        assert slips[0] < slips[1] < slips[2]


class TestRender(object):
    def test_shape(self):
        image = render_observation(make_terrain('Grass', 4), 3.0)
        assert image.shape == (64, 64, 3)
        assert image.dtype == np.float32
        assert image.min() >= 0.0
        assert image.max() <= 1.0

    def test_deterministic(self):
        terrain = make_terrain('PebbleSidewalk', 8)
        a = render_observation(terrain, 1.25)
        b = render_observation(terrain, 1.25)
        assert a.tobytes() == b.tobytes()

    def test_flat_height_channel(self):
        terrain = TerrainSpec('Concrete', 0.9, 0.0, 0.05, 1)
        image = render_observation(terrain, 0.0)
        assert np.all(image[:, :, 0] == 0.5)

    def test_seeds_differ(self):
        for seed in range(100):
            a = render_observation(make_terrain('Gravel', seed), 0.0)
            b = render_observation(make_terrain('Gravel', seed + 1000), 0.0)
            assert np.mean(a != b) >= 0.01

    def test_invalid_position(self):
        with raises(InvalidArgument):
            render_observation(make_terrain('Grass', 1), -1.0)


class TestRollout(object):
    def test_step_count(self, gravel_log):
        assert len(gravel_log) == 6000
        assert gravel_log.proprio.shape == (6000, D_P)
        assert gravel_log.imu.shape == (6000, 5, 3)
        assert len(gravel_log.frames) == 600
        assert gravel_log.run_id == 17
        assert np.all(np.diff(gravel_log.timestamps) > 0)

    def test_frames_follow_frame_rate(self, gravel_log):
        assert gravel_log.frame_index[0] == 0
        assert gravel_log.frame_index[9] == 0
        assert gravel_log.frame_index[10] == 1
        assert gravel_log.frame_index[-1] == 599

    def test_achieved_tracks_slip(self, gravel_log):
        assert np.all(gravel_log.commanded == 2.0)
        expected = 2.0 * (1.0 - gravel_log.slips.mean())
        assert abs(gravel_log.achieved.mean() - expected) <= 0.05 * expected

    def test_imu_samples(self, gravel_log):
        samples = gravel_log.imu_samples(10)
        assert [s.imu_id for s in samples] == list(C.IMU_IDS)
        assert np.array_equal(samples[2].accel, gravel_log.imu[10, 2])
        assert np.array_equal(gravel_log.imu_trace(C.IMU_IDS[2])[10],
                              samples[2].accel)

    def test_deterministic(self, gravel_log):
        again = rollout(make_terrain('Gravel', 3), ConstantProfile(2.0), 6.8,
                        60.0, 17)
        assert again == gravel_log

    def test_invalid_duration(self):
        with raises(InvalidArgument):
            rollout(make_terrain('Gravel', 3), ConstantProfile(1.0), 0.0,
                    0.0, 1)

    def test_frame_interval(self):
        assert steps_per_frame(0.01, 10.0) == 10
        with raises(InvalidArgument):
            steps_per_frame(0.01, 30.0)

    def test_profile_meta(self):
        profile = SegmentProfile(3.0, 4)
        log = rollout(make_terrain('Grass', 1), profile, 1.0, 3.0, 4)
        assert log.meta['profile']['kind'] == 'segments'
        assert log.commanded[0] == profile.values[0]


class TestProfiles(object):
    def test_segment_profile(self):
        profile = SegmentProfile(20.0, 9, segment=5.0, low=0.3, high=2.5)
        assert len(profile.values) == 4
        assert profile.values.min() >= 0.3
        assert profile.values.max() <= 2.5
        assert profile(0.0) == profile(4.99)
        assert profile(5.0) == profile.values[1]
        assert profile(100.0) == profile.values[-1]
        assert np.array_equal(SegmentProfile(20.0, 9).values, profile.values)

    def test_constant_profile(self):
        assert ConstantProfile(1.5)(12.0) == 1.5
        with raises(InvalidArgument):
            ConstantProfile(-1.0)
