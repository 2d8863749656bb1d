# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from panos.core.cls.nullerror import NullError
from panos.core.exceptions import NoContextError

# Items only present while a command runs.
CONTEXT_ITEMS = frozenset(('config', 'command', 'manifest'))


class Globals(object):
    """Process wide context.

    Holds the configuration, subcommand and manifest of the command
    currently executing. Reading a context item that has not been set
    returns a :class:`NullError` placeholder that raises
    :class:`NoContextError` on use.
    """
    __slots__ = ('_items',)

    def __init__(self):
        object.__setattr__(self, '_items', {})

    def __getattr__(self, name):
        try:
            return self._items[name]
        except KeyError:
            pass
        if name in CONTEXT_ITEMS:
            return NullError(NoContextError,
                             "Working outside of '%s' context" % name)
        raise AttributeError("Globals object has no '%s'" % name)

    def __setattr__(self, name, value):
        self._items[name] = value

    def __delattr__(self, name):
        try:
            del self._items[name]
        except KeyError:
            raise AttributeError("Globals object has no '%s'" % name) from None

    def __contains__(self, name):
        return name in self._items

    def clear(self):
        """Leave the command context."""
        self._items.clear()


panos_globals = Globals()
