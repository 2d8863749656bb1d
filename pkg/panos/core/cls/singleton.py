# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).


class Singleton(type):
    """Metaclass keeping one instance per class.

    Later calls return the first instance and ignore their arguments.
    """
    _instances = {}

    def _key(cls, args):
        return cls

    def __call__(cls, *args, **kwargs):
        key = type(cls)._key(cls, args)
        try:
            return Singleton._instances[key]
        except KeyError:
            instance = super().__call__(*args, **kwargs)
            Singleton._instances[key] = instance
            return instance


class NamedSingleton(Singleton):
    """Metaclass keeping one instance per class and first argument.

    GetLogger('panos.sim') always returns the same logger wrapper.
    """
    def _key(cls, args):
        return (cls, args[0] if args else None)
