# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from datetime import datetime

import pytz
from tzlocal import get_localzone

_system = None


def system_timezone():
    """Timezone of the host, looked up once."""
    global _system
    if _system is None:
        _system = get_localzone()
    return _system


def now(tz=pytz.utc):
    """Aware current time, UTC unless tz is given."""
    return datetime.now(tz=tz)


def isoformat(when=None):
    """ISO 8601 UTC timestamp string (now when omitted).

    Naive datetimes are taken as host local time.
    """
    if when is None:
        when = now()
    elif when.tzinfo is None:
        when = when.replace(tzinfo=system_timezone())
    return when.astimezone(pytz.utc).strftime('%Y-%m-%dT%H:%M:%S.%fZ')
