# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from timeit import default_timer


class Timer(object):
    """Wall-clock timer for a block of code.

    Entering returns the timer itself; calling it gives the seconds elapsed
    so far, or the final duration once the block has exited.

    .. code:: python

        with Timer() as elapsed:
            rollout(...)
            log.info('Rollout done', timer=elapsed())
    """
    __slots__ = ('_start', '_stop')

    def __init__(self):
        self._start = None
        self._stop = None

    def __enter__(self):
        self._start = default_timer()
        self._stop = None
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self._stop = default_timer()

    def __call__(self):
        if self._start is None:
            return 0.0
        stop = self._stop if self._stop is not None else default_timer()
        return stop - self._start
