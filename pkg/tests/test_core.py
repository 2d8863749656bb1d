# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import logging
from datetime import datetime

import pytest
import pytz
from pytest import raises

from panos import g
from panos.core.config import Config
from panos.core.exceptions import (NoContextError, ParseError, VersionError,
                                   ConfigError, ValidationError, Error,
                                   TrainingAborted, NumericFailure)
from panos.core.logger import GetLogger, env_level, ENV_LEVEL
from panos.utils.formatting import format_seconds, format_float
from panos.utils.split import chunks, split_by_n
from panos.utils.timer import Timer
from panos.utils.timezone import isoformat

parametrize = pytest.mark.parametrize


class TestGlobals(object):
    def test_outside_context(self):
        g.clear()
        assert not g.config
        with raises(NoContextError):
            g.config.get('train', 'epochs')
        with raises(AttributeError):
            g.unknown

    def test_set_and_clear(self):
        config = Config()
        g.config = config
        assert g.config is config
        assert 'config' in g
        g.clear()
        assert 'config' not in g


class TestExceptions(object):
    def test_hierarchy(self):
        assert issubclass(ConfigError, ValidationError)
        assert issubclass(VersionError, ParseError)
        assert issubclass(ParseError, Error)

    def test_parse_error(self):
        e = ParseError('data.pnsd', 41, 'truncated')
        assert e.record == 41
        assert 'data.pnsd' in str(e)
        assert '41' in str(e)

    def test_version_error(self):
        e = VersionError('data.pnsd', 9, 1)
        assert e.found == 9
        assert e.expected == 1
        assert e.record == -1

    def test_training_aborted(self):
        e = TrainingAborted('bad', 'ckpt.pnsw')
        assert e.checkpoint == 'ckpt.pnsw'
        assert NumericFailure('query').parameter == 'query'


class TestLogger(object):
    def test_named_singleton(self):
        assert GetLogger('panos.test') is GetLogger('panos.test')
        assert GetLogger('panos.test') is not GetLogger('panos.other')

    @parametrize('value,level', (('error', 'ERROR'),
                                 ('warn', 'WARNING'),
                                 ('INFO', 'INFO'),
                                 ('debug', 'DEBUG'),
                                 ('', None)))
    def test_env_level(self, monkeypatch, value, level):
        monkeypatch.setenv(ENV_LEVEL, value)
        assert env_level() == level

    def test_env_level_invalid(self, monkeypatch):
        monkeypatch.setenv(ENV_LEVEL, 'chatty')
        with raises(ValueError):
            env_level()

    def test_configure(self, monkeypatch):
        monkeypatch.setenv(ENV_LEVEL, 'debug')
        root = GetLogger()
        try:
            root.configure(Config())
            assert GetLogger('panos.test').debug_mode()
            monkeypatch.delenv(ENV_LEVEL)
            root.configure(Config())
            assert root.getEffectiveLevel() == logging.WARNING
        finally:
            root.setLevel('WARNING')

    def test_timer_suffix(self, caplog):
        log = GetLogger('panos.test')
        with caplog.at_level(logging.WARNING):
            log.warning('slow', timer=2.5)
        assert 'slow (DURATION: 2.500s)' in caplog.text


class TestUtils(object):
    def test_format(self):
        assert format_seconds(2.5) == '2.500s'
        assert format_seconds(0.0125) == '12.500ms'
        assert format_float(1 / 3, 3) == '0.333'

    def test_chunks(self):
        assert [len(c) for c in chunks(list(range(10)), 4)] == [4, 4, 2]
        assert list(chunks([], 4)) == []

    def test_split_by_n(self):
        assert list(split_by_n('abcdefg', 3)) == ['abc', 'def', 'g']
        assert list(split_by_n('', 3)) == ['']

    def test_timer(self):
        with Timer() as elapsed:
            assert elapsed() >= 0.0
        final = elapsed()
        assert final >= 0.0
        assert elapsed() == final

    def test_isoformat(self):
        when = datetime(2026, 1, 2, 3, 4, 5, tzinfo=pytz.utc)
        assert isoformat(when) == '2026-01-02T03:04:05.000000Z'
        assert isoformat().endswith('Z')
