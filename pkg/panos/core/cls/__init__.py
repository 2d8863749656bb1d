# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.core.cls.singleton import NamedSingleton, Singleton
from panos.core.cls.nullerror import NullError
