# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Sphinx configuration for the PANOS Workbench manual and API pages."""
import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from panos import metadata

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.viewcode',
              'sphinx.ext.napoleon']

autodoc_member_order = 'bysource'
napoleon_google_docstring = True
napoleon_numpy_docstring = False

templates_path = []
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['build']

project = metadata.description
copyright = metadata.copyright
author = metadata.authors_string
version = release = metadata.version
language = 'en'
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = []
htmlhelp_basename = '%sDoc' % metadata.project_no_spaces

man_pages = [(master_doc, metadata.package,
              '%s Documentation' % metadata.description,
              [metadata.authors_string], 1)]
