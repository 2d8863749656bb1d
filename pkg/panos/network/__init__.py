# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.network.params import (ModelParams, TRAINABLE, N_V, D_V,
                                  ALPHA_MAX, CONFIDENCE_MODES)
from panos.network.model import (ForwardTrace, tokenize_image,
                                 encode_proprio, attend, confidence,
                                 predict, forward, select, selection_size)
from panos.network.checkpoint import save_checkpoint, load_checkpoint
