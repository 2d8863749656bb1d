# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.sim.terrain import (TerrainClass, TerrainSpec, TerrainCourse,
                               make_terrain, make_course, as_course)
from panos.sim.render import render_observation
from panos.sim.world import (D_P, ProprioState, ImuSample, SimState, step)
from panos.sim.profiles import ConstantProfile, SegmentProfile
from panos.sim.rollout import RunLog, Recorder, rollout
from panos.sim.runlog import write_runlog, read_runlog
