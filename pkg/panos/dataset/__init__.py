# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.dataset.sequence import Sequence, form_sequences
from panos.dataset.batch import MiniBatch, shuffle_batches
from panos.dataset.storage import write_dataset, read_dataset
