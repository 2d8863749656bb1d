# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).


class Error(Exception):
    """PANOS Root Exception

    Args:
        message (str): Error Message.
    """
    def __init__(self, message):
        self._msg = message
        super().__init__(self._msg)

    def __str__(self):
        return str(self._msg)


class NoContextError(Error):
    """No Context Error.

    This error is raised when an operation is performed outside of the required
    context, for example reading ``g.config`` outside of a command.

    Args:
        message (str): Reason for context error.
    """
    def __init__(self, message):
        super().__init__(message)


class ValidationError(Error):
    """Validation Error.

    Input could not be validated. Message arguement may contain a detailed
    response.

    Args:
        message (str): Reason for validation error.
    """
    def __init__(self, message):
        super().__init__(message)


class InvalidArgument(ValidationError):
    """Invalid Argument.

    An operation was called with arguments violating its preconditions
    (shape, range, empty input).

    Args:
        message (str): Reason for error.
    """
    def __init__(self, message):
        super().__init__(message)


class ConfigError(ValidationError):
    """Configuration Error.

    Args:
        key (str): Offending key as 'section.key'.
        message (str): Reason for error.
    """
    def __init__(self, key, message):
        self.key = key
        super().__init__("Config '%s': %s" % (key, message,))


class SimulatorDivergence(Error):
    """Simulator produced non-finite state.

    Args:
        message (str): Which quantity diverged.
    """
    def __init__(self, message):
        super().__init__(message)


class ParseError(Error):
    """Malformed file.

    Args:
        path (str): File being parsed.
        record (int): Index of the last complete record (-1 for none).
        message (str): Reason for error.
    """
    def __init__(self, path, record, message):
        self.path = path
        self.record = record
        super().__init__("%s: %s (last complete record %s)" % (path,
                                                              message,
                                                              record,))


class VersionError(ParseError):
    """File format version mismatch.

    Args:
        path (str): File being parsed.
        found (int): Version found in file.
        expected (int): Version supported.
    """
    def __init__(self, path, found, expected):
        self.found = found
        self.expected = expected
        super().__init__(path, -1,
                         "format version %s not supported (expected %s)" % (
                             found, expected,))


class CheckpointError(Error):
    """Checkpoint does not match the expected model.

    Args:
        message (str): Reason for error.
    """
    def __init__(self, message):
        super().__init__(message)


class NumericFailure(Error):
    """Non-finite value during training.

    Args:
        parameter (str): Parameter name with non-finite gradient.
    """
    def __init__(self, parameter):
        self.parameter = parameter
        super().__init__("Non-finite gradient for parameter '%s'" % parameter)


class TrainingAborted(Error):
    """Training aborted.

    Args:
        reason (str): Why training stopped.
        checkpoint (str): Last good checkpoint path or None.
    """
    def __init__(self, reason, checkpoint=None):
        self.checkpoint = checkpoint
        super().__init__("Training aborted: %s (last good checkpoint: %s)" % (
            reason, checkpoint,))
