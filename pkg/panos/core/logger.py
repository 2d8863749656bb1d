# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import os
import sys
import logging

from panos import g
from panos.core.exceptions import NoContextError
from panos.core.cls.singleton import NamedSingleton
from panos.utils.formatting import format_seconds
from panos.utils.split import list_of_lines, split_by_n

ENV_LEVEL = 'PANOS_LOG_LEVEL'

LEVELS = ('CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG')

_ENV_LEVELS = {'error': 'ERROR',
               'warn': 'WARNING',
               'warning': 'WARNING',
               'info': 'INFO',
               'debug': 'DEBUG'}

# Longest piece of a single log line.
LINE_LIMIT = 500

log_format = logging.Formatter('%(asctime)s panos[%(process)d]'
                               ' %(name)s <%(levelname)s>:'
                               ' %(message)s%(command)s',
                               datefmt='%b %d %H:%M:%S')

_root_ready = False


def log_formatted(facility, message, prepend=None, append=None):
    """Emit message through facility one line at a time.

    Long lines are cut into LINE_LIMIT pieces. Multi-piece messages number
    each piece ``n# `` so they can be reassembled from interleaved output.

    Args:
        facility (callable): Logging call, for example logger.debug.
        message (str): Message to log.
        prepend (str): Text placed before each piece (optional).
        append (str): Text placed after each piece (optional).
    """
    if not message:
        return
    pieces = [piece for line in list_of_lines(message)
              for piece in split_by_n(line, LINE_LIMIT)]
    numbered = len(pieces) > 1
    for index, piece in enumerate(pieces):
        if numbered:
            piece = '%s# %s' % (index, piece)
        facility(' '.join(part for part in (prepend, piece, append)
                          if part is not None))


def env_level():
    """Level requested through PANOS_LOG_LEVEL or None.
    """
    value = os.environ.get(ENV_LEVEL, '').strip()
    if not value:
        return None
    level = _ENV_LEVELS.get(value.lower())
    if level is None:
        raise ValueError("Invalid %s '%s'" % (ENV_LEVEL, value) +
                         " (expected error, warn, info or debug)")
    return level


def set_level(target, level):
    """Set a logger or handler level from a number or level name."""
    if isinstance(level, int):
        target.setLevel(level)
        return
    name = str(level).strip().upper()
    if name == 'WARN':
        name = 'WARNING'
    if name not in LEVELS:
        raise ValueError("Invalid logging level '%s' for logger '%s'" % (
            level, getattr(target, 'name', target)))
    target.setLevel(getattr(logging, name))


def format_timer(elapsed):
    """Log suffix for elapsed seconds, '' when elapsed is None."""
    if elapsed is None:
        return ''
    return ' (DURATION: %s)' % format_seconds(elapsed)


class _CommandFilter(logging.Filter):
    """Adds the running subcommand to every record."""
    def filter(self, record):
        try:
            record.command = ' (command: %s)' % g.command.name
        except NoContextError:
            record.command = ''
        return True


class GetLogger(metaclass=NamedSingleton):
    """Logger wrapper shared per name.

    Every module uses ``log = GetLogger(__name__)``. The unnamed instance
    wraps the root logger and owns the handlers.

    Args:
        name (str): Dotted logger name (optional).
    """
    __slots__ = ('handlers', 'name', 'logger', '_level')

    def __init__(self, name=None):
        self.handlers = {}
        self.name = name
        self.logger = logging.getLogger(name)
        self._level = self.logger.getEffectiveLevel()

    def configure(self, config=None):
        """Apply [logging] config and PANOS_LOG_LEVEL to the root logger.

        Args:
            config (Config): Loaded configuration (optional). When omitted the
                active command config in ``g.config`` is used if any.
        """
        if config is None:
            try:
                config = g.config
                config.sections()
            except NoContextError:
                config = None

        level = 'WARNING'
        log_file = None
        if config is not None and config.has_section('logging'):
            level = config.get('logging', 'log_level', fallback=level)
            log_file = config.get('logging', 'log_file',
                                  fallback='').strip() or None

        root = GetLogger()
        root.setLevel(env_level() or level)
        root.log_stderr()
        if log_file is not None:
            root.log_file(log_file)
        return self

    def _ensure_root(self):
        global _root_ready
        root = GetLogger() if self.name is not None else self
        if not root.handlers:
            root.setLevel(env_level() or 'WARNING')
            root.log_stderr()
        _root_ready = True

    def setLevel(self, level):
        set_level(self.logger, level)
        # Named wrappers cache their effective level.
        for instance in list(NamedSingleton._instances.values()):
            if isinstance(instance, GetLogger):
                instance._level = instance.logger.getEffectiveLevel()

    def getEffectiveLevel(self):
        self._level = self.logger.getEffectiveLevel()
        return self._level

    def debug_mode(self):
        """True when debug messages are emitted."""
        if not _root_ready:
            self._ensure_root()
        return self.getEffectiveLevel() <= logging.DEBUG

    def _add_handler(self, key, handler, level):
        global _root_ready
        set_level(handler, level)
        handler.setFormatter(log_format)
        handler.addFilter(_CommandFilter())
        self.logger.addHandler(handler)
        self.handlers[key] = handler
        _root_ready = True
        return handler

    def log_file(self, path, level=logging.NOTSET):
        if 'file' in self.handlers:
            return self.handlers['file']
        return self._add_handler('file', logging.FileHandler(path), level)

    def log_stderr(self, level=logging.NOTSET):
        if 'stderr' in self.handlers:
            return self.handlers['stderr']
        return self._add_handler('stderr',
                                 logging.StreamHandler(stream=sys.stderr),
                                 level)

    def _emit(self, level, msg, prepend, append, timer):
        if not _root_ready:
            self._ensure_root()
        if level < self._level:
            return
        facility = getattr(self.logger, logging.getLevelName(level).lower())
        log_formatted(facility, str(msg) + format_timer(timer),
                      prepend, append)

    def critical(self, msg, prepend=None, append=None, timer=None):
        """Log at CRITICAL.

        Args:
            msg (str): Message.
            prepend (str): Text before each line (optional).
            append (str): Text after each line (optional).
            timer (float): Elapsed seconds, usually from
                :class:`panos.utils.timer.Timer`; adds (DURATION: ...).
        """
        self._emit(logging.CRITICAL, msg, prepend, append, timer)

    def error(self, msg, prepend=None, append=None, timer=None):
        self._emit(logging.ERROR, msg, prepend, append, timer)

    def warning(self, msg, prepend=None, append=None, timer=None):
        self._emit(logging.WARNING, msg, prepend, append, timer)

    def info(self, msg, prepend=None, append=None, timer=None):
        self._emit(logging.INFO, msg, prepend, append, timer)

    def debug(self, msg, prepend=None, append=None, timer=None):
        self._emit(logging.DEBUG, msg, prepend, append, timer)
