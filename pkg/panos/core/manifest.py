# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os

from panos import metadata
from panos.core.exceptions import InvalidArgument
from panos.utils import js
from panos.utils.timezone import isoformat, system_timezone

MANIFEST = 'manifest.json'


class RunManifest(object):
    """Record of one command run.

    Lists the config hash, seeds, input and output paths (each output
    exactly once), the tool version, UTC start/end timestamps and the host
    timezone. Those last three are the only fields that differ between
    identical reruns.

    Args:
        command (str): Subcommand name.
        config_hash (str): Hash of the configuration used.
        out (str): Output directory holding the manifest.
    """
    __slots__ = ('command', 'config_hash', 'out', 'seeds', 'inputs',
                 'outputs', 'started', 'finished', 'extra')

    def __init__(self, command, config_hash, out):
        self.command = command
        self.config_hash = config_hash
        self.out = out
        self.seeds = {}
        self.inputs = []
        self.outputs = []
        self.started = isoformat()
        self.finished = None
        self.extra = {}

    @property
    def path(self):
        return os.path.join(self.out, MANIFEST)

    def _relative(self, path):
        return os.path.relpath(path, self.out).replace(os.sep, '/')

    def seed(self, name, value):
        self.seeds[name] = value

    def add_input(self, path):
        path = os.path.abspath(path)
        if path not in self.inputs:
            self.inputs.append(path)

    def add_output(self, path):
        """Register an artifact written under the output directory."""
        relative = self._relative(path)
        if relative in self.outputs:
            raise InvalidArgument("output '%s' registered twice" % relative)
        self.outputs.append(relative)
        return path

    def as_dict(self):
        return {'command': self.command,
                'tool': metadata.package,
                'version': metadata.version,
                'config_hash': self.config_hash,
                'seeds': self.seeds,
                'inputs': self.inputs,
                'outputs': self.outputs,
                'started': self.started,
                'finished': self.finished,
                'timezone': str(system_timezone()),
                'extra': self.extra}

    def write(self):
        """Stamp the finish time and write manifest.json. Returns path."""
        self.finished = isoformat()
        with open(self.path, 'w', encoding='UTF-8', newline='\n') as f:
            f.write(js.dumps(self.as_dict()) + '\n')
        return self.path


def read_manifest(path):
    """Manifest dict from a manifest file or its directory."""
    if os.path.isdir(path):
        path = os.path.join(path, MANIFEST)
    with open(path, 'r', encoding='UTF-8') as f:
        return js.loads(f.read())
