# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos import metadata

# The big 'g' for accessing process wide globals.
from panos.core.globals import panos_globals as g

# The root logger is configured before any other module logs.
from panos.core.logger import GetLogger
log = GetLogger()

# Convenience imports.
from panos.core import exceptions
from panos.core.config import Config

__version__ = metadata.version
__author__ = metadata.authors[0]
__license__ = metadata.license
__copyright__ = metadata.copyright
__identity__ = metadata.identity
