# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import hashlib
import configparser

from panos.core.config.defaults import defaults
from panos.core.exceptions import ConfigError


class Config(configparser.ConfigParser):
    """PANOS ConfigParser extended.

    You can find complete set of methods from Python ConfigParser
    documentation.

    Alterations in behaviour:
        * Only sections and options present in
          :data:`panos.core.config.defaults` are accepted. Anything else raises
          :class:`ConfigError` naming the offending 'section.key'.
        * Typed getters validate ranges and report the offending key.

    Args:
        config_file (str): Optional config file to load.
    """
    def __init__(self, config_file=None):
        super().__init__(interpolation=None)
        self.read_dict(defaults)
        if config_file is not None:
            self.load(config_file)

    def load(self, config_file, encoding=None):
        """Load Configuration file.

        Args:
            config_file (str): Path / Location to configuration file.
        """
        loaded = configparser.ConfigParser(interpolation=None)
        try:
            with open(config_file, 'r', encoding=encoding) as f:
                loaded.read_file(f)
        except configparser.Error as e:
            raise ConfigError(config_file, 'parse failed (%s)' % e) from None

        self.merge(loaded)

    def merge(self, other):
        """Merge validated keys from another ConfigParser or dict.
        """
        if isinstance(other, dict):
            parser = configparser.ConfigParser(interpolation=None)
            parser.read_dict(other)
            other = parser

        for key in other.defaults():
            raise ConfigError('DEFAULT.%s' % key, 'unknown key')

        for section in other.sections():
            if section not in defaults:
                raise ConfigError(section, 'unknown section')
            for key, value in other.items(section, raw=True):
                if key not in defaults[section]:
                    raise ConfigError('%s.%s' % (section, key), 'unknown key')
                self.set(section, key, value)

    def save(self, config_file):
        """Save Configuration file.

        Args:
            config_file (str): Path / Location to configuration file.
        """
        with open(config_file, 'w') as f:
            self.write(f)

    def digest(self, *sections):
        """Config hash.

        SHA-256 over the sorted 'section.key=value' lines of the given sections
        (all sections when none given).

        Returns hex str.
        """
        if not sections:
            sections = sorted(self.sections())
        lines = []
        for section in sorted(sections):
            for key, value in sorted(self.items(section)):
                lines.append('%s.%s=%s' % (section, key, value.strip()))
        return hashlib.sha256('\n'.join(lines).encode('UTF-8')).hexdigest()

    def _typed(self, section, option, cast, check, description):
        key = '%s.%s' % (section, option)
        try:
            value = cast(self.get(section, option))
        except (configparser.Error, ValueError):
            raise ConfigError(key, 'expected %s' % description) from None
        if not check(value):
            raise ConfigError(key, 'expected %s, got %s' % (description,
                                                            value,))
        return value

    def getpositive(self, section, option):
        """Float strictly greater than zero."""
        return self._typed(section, option, float, lambda v: v > 0,
                           'value > 0')

    def getnonneg(self, section, option):
        """Float greater or equal to zero."""
        return self._typed(section, option, float, lambda v: v >= 0,
                           'value >= 0')

    def getfraction(self, section, option):
        """Float in (0, 1]."""
        return self._typed(section, option, float, lambda v: 0 < v <= 1,
                           'value in (0, 1]')

    def getcount(self, section, option):
        """Integer >= 1."""
        return self._typed(section, option, int, lambda v: v >= 1,
                           'integer >= 1')

    def getseed(self, section, option):
        """Integer >= 0."""
        return self._typed(section, option, int, lambda v: v >= 0,
                           'integer >= 0')

    def getchoice(self, section, option, choices):
        """One of choices (case sensitive)."""
        return self._typed(section, option, lambda v: v.strip(),
                           lambda v: v in choices,
                           'one of %s' % ', '.join(choices))

    def getlist(self, section, option, fallback=None):
        """Get list from comma separated option value.

        Example:

        .. code::

            [collect]
            terrains = Concrete, Grass,
                Gravel

        Returns list of str.
        """
        try:
            val = self.get(section, option)
        except configparser.Error:
            if fallback is not None:
                return fallback
            raise ConfigError('%s.%s' % (section, option),
                              'missing') from None
        val = val.replace('\n', '').replace('\r', '')
        return [v.strip() for v in val.split(',') if v.strip() != '']

    def getfloatlist(self, section, option, nonneg=True):
        """Comma separated floats (non-negative by default)."""
        key = '%s.%s' % (section, option)
        try:
            values = [float(v) for v in self.getlist(section, option)]
        except ValueError:
            raise ConfigError(key, 'expected list of numbers') from None
        if not values:
            raise ConfigError(key, 'expected at least one value')
        if nonneg and min(values) < 0:
            raise ConfigError(key, 'expected values >= 0')
        return values

    def getintlist(self, section, option):
        """Comma separated non-negative integers."""
        key = '%s.%s' % (section, option)
        try:
            values = [int(v) for v in self.getlist(section, option)]
        except ValueError:
            raise ConfigError(key, 'expected list of integers') from None
        if not values or min(values) < 0:
            raise ConfigError(key, 'expected integers >= 0')
        return values
