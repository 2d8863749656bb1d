# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
from jinja2 import Environment as Jinja2Environment
from jinja2 import PackageLoader, StrictUndefined
from jinja2.exceptions import TemplateNotFound

from panos.core.logger import GetLogger
from panos.core.cls.singleton import Singleton
from panos.utils.timer import Timer

log = GetLogger(__name__)


class PanosLoader(PackageLoader):
    """Templates packaged under panos/templates."""
    def __init__(self):
        super().__init__('panos', 'templates', encoding='UTF-8')

    def get_source(self, environment, template):
        with Timer() as elapsed:
            try:
                source = super().get_source(environment, template)
            except TemplateNotFound:
                log.error("Template '%s' not found" % template)
                raise
        log.debug("Loaded Package Template %s" % template, timer=elapsed())
        return source


class Environment(Jinja2Environment, metaclass=Singleton):
    def __init__(self):
        super().__init__(loader=PanosLoader(),
                         trim_blocks=True,
                         lstrip_blocks=True,
                         keep_trailing_newline=True,
                         autoescape=True,
                         undefined=StrictUndefined)
