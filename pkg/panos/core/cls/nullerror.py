# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).


class NullError(object):
    """Placeholder raising an exception on any access.

    Stands in for context objects (the active config, the running command)
    before a command has set them up.

    Args:
        exception (class): Exception to raise.
        *args: Any other arguments to pass to exception.
    """
    def __init__(self, exception, *args, **kwargs):
        super().__setattr__('_exception', exception)
        super().__setattr__('_args', args)
        super().__setattr__('_kwargs', kwargs)

    def _raise(self, *args, **kwargs):
        raise self._exception(*self._args, **self._kwargs)

    __call__ = _raise
    __getattr__ = _raise
    __setattr__ = _raise
    __getitem__ = _raise
    __setitem__ = _raise
    __len__ = _raise
    __contains__ = _raise
    __str__ = _raise

    def __bool__(self):
        return False

    def __repr__(self):
        return 'NullError(%s)' % self._exception.__name__
