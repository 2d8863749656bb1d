# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import datetime


def format_seconds(seconds):
    """Format elapsed seconds to string.

    >>> format_seconds(0.0125)
    '12.500ms'
    >>> format_seconds(2.5)
    '2.500s'

    Args:
        seconds (float): elapsed seconds.
    """
    # Minutes
    if seconds >= 60:
        seconds = str(datetime.timedelta(seconds=round(seconds)))
        hours, minutes, secs = seconds.split(':')
        return '%sh %sm %ss' % (hours, minutes, secs)
    # Seconds
    if seconds >= 1:
        return '%.3fs' % seconds

    # Milliseconds
    return '%.3fms' % (seconds * 1000)


def format_float(value, digits=6):
    """Fixed precision float for CSV output.

    >>> format_float(0.1 + 0.2, 4)
    '0.3000'
    """
    return '%.*f' % (digits, value)
