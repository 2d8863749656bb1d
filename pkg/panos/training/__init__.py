# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.training.losses import (LossBreakdown, compute_losses,
                                   clamped_total, SLIP_SCOPES)
from panos.training.gradients import (evaluate_batch, backward,
                                      loss_and_gradients)
from panos.training.optimizer import Adam
from panos.training.fit import (TrainConfig, Trainer, fit, write_curve,
                                read_curve, checkpoint_path)
