# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os

from panos import g
from panos.core.config import Config
from panos.core.exceptions import ConfigError, Error
from panos.core.logger import GetLogger
from panos.core.manifest import RunManifest
from panos.utils.timer import Timer

log = GetLogger(__name__)

CONFIG_FILE = 'config.ini'


class Command(object):
    """Context of one subcommand run.

    Entering sets ``g.config``, ``g.command`` and ``g.manifest``, configures
    logging, creates the output directory and saves the effective config
    there. A clean exit writes the manifest. The globals are cleared either
    way.

    Args:
        name (str): Subcommand name.
        config (Config): Loaded configuration.
        out (str): Output directory.
        sections (tuple): Config sections the command depends on, hashed
            into the manifest.
    """
    def __init__(self, name, config, out, sections=None):
        self.name = name
        self.config = config
        self.out = out
        self.sections = tuple(sections or ())
        self.manifest = None
        self._timer = None

    def __enter__(self):
        try:
            os.makedirs(self.out, exist_ok=True)
        except OSError as e:
            raise Error("Output directory '%s' not writable (%s)" % (
                self.out, e.strerror)) from None
        g.config = self.config
        g.command = self
        self.manifest = RunManifest(self.name,
                                    self.config.digest(*self.sections),
                                    self.out)
        g.manifest = self.manifest
        GetLogger().configure(self.config)
        self.config.save(self.path(CONFIG_FILE))
        self._timer = Timer()
        self.elapsed = self._timer.__enter__()
        log.info('Started, output %s' % self.out)
        return self

    def path(self, *parts):
        """Output path registered in the manifest."""
        path = os.path.join(self.out, *parts)
        directory = os.path.dirname(path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        return self.manifest.add_output(path)

    def __exit__(self, exc_type, exc_value, traceback):
        self._timer.__exit__(exc_type, exc_value, traceback)
        try:
            if exc_type is None:
                self.manifest.write()
                log.info('Completed', timer=self.elapsed())
        finally:
            g.clear()
        return False


def load_config(path=None, overrides=None):
    """Config with defaults, the file at path and override dict merged."""
    config = Config()
    if path is not None:
        if not os.path.isfile(path):
            raise ConfigError(path, 'file not found')
        config.load(path)
    if overrides:
        config.merge(overrides)
    return config


def world_settings(config):
    """(dt, frame_rate) from [world], validated."""
    dt = config.getpositive('world', 'dt')
    if dt > 0.1:
        raise ConfigError('world.dt', 'expected value in (0, 0.1]')
    frame_rate = config.getpositive('world', 'frame_rate')
    ratio = 1.0 / (frame_rate * dt)
    if round(ratio) < 1 or abs(ratio - round(ratio)) > 1e-9:
        raise ConfigError('world.frame_rate',
                          'frame interval must be a multiple of world.dt')
    return dt, frame_rate
