# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Developer tasks: ``paver test_all``, ``paver doc_html``, ``paver sdist``.
"""
import sys
import subprocess

sys.path.append('.')
from setup import (
    setup_dict, print_success_message, print_failure_message, _lint, _test,
    _test_all, CODE_DIRECTORY, DOCS_DIRECTORY, TESTS_DIRECTORY, PYTEST_FLAGS)

from paver.easy import options, task, needs, consume_args
from paver.setuputils import install_distutils_tasks

options(setup=setup_dict)

install_distutils_tasks()


def _exit(retcode, summary=False):
    if summary:
        if retcode == 0:
            print_success_message('All checks passed.')
        else:
            print_failure_message('Checks failed (exit %s).' % retcode)
    raise SystemExit(retcode)


def _doc_make(target):
    make = 'make.bat' if sys.platform == 'win32' else 'make'
    return subprocess.call([make, target], cwd=DOCS_DIRECTORY)


@task
@needs('doc_html', 'setuptools.command.sdist')
def sdist():
    """Build the HTML docs and the source tarball."""
    pass


@task
def test():
    """Run the unit tests and module doctests."""
    _exit(_test())


@task
def lint():
    """Run flake8 over the project files."""
    _exit(_lint())


@task
def test_all():
    """Lint, then run every test including the slow pipeline checks."""
    _exit(_test_all(), summary=True)


@task
def coverage():
    """Run the unit tests with a line coverage report."""
    try:
        import pytest_cov  # NOQA
    except ImportError:
        print_failure_message('coverage needs pytest-cov installed.')
        raise SystemExit(1)
    import pytest
    _exit(pytest.main(PYTEST_FLAGS + ['--cov', CODE_DIRECTORY,
                                      '--cov-report', 'term-missing',
                                      TESTS_DIRECTORY]))


@task
@consume_args
def run(args):
    """Run the panos command line; arguments are passed through."""
    from panos.main import main
    _exit(main([CODE_DIRECTORY] + args))


@task
def doc_html():
    """Build the HTML docs into docs/build/html."""
    retcode = _doc_make('html')
    if retcode:
        raise SystemExit(retcode)


@task
def doc_clean():
    """Delete the built docs."""
    retcode = _doc_make('clean')
    if retcode:
        raise SystemExit(retcode)
