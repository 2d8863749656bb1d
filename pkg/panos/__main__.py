# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.main import entry_point

entry_point()
