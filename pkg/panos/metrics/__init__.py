# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.metrics.jerk import jerk_series, mean_jerk, improvement
from panos.metrics.vibration import vibration_cost, hip_offset_cost
from panos.metrics.pca import pca_report
from panos.metrics.report import (StabilityReport, write_reports,
                                  read_reports, REPORT_HEADER)
