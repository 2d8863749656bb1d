# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.control.controllers import (ControlInput, FixedVelocity,
                                       ReactiveSlip, PanosController,
                                       panos_controller)
from panos.control.trial import (TrialSpec, CONTROLLERS, MIXED,
                                 trial_terrain, make_controller,
                                 trial_from_config, run_trial)
