# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.commands.collect import collect
from panos.commands.train import train
from panos.commands.compare import compare
from panos.commands.pca_report import pca_report
from panos.commands.evaluate import evaluate
