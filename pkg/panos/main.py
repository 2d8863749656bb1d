#!/usr/bin/env python
# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import sys
import argparse
import traceback

from panos import metadata
from panos.core.exceptions import Error
from panos.core.logger import GetLogger
from panos.commands import collect, train, compare, pca_report, evaluate
from panos.commands.base import load_config

log = GetLogger(__name__)


def _collect(args, config):
    collect(config, args.out, args.seed)


def _train(args, config):
    train(config, args.out, args.dataset, args.seed)


def _compare(args, config):
    compare(config, args.out, args.checkpoint)


def _pca_report(args, config):
    pca_report(config, args.out, args.paths, args.seed)


def _eval(args, config):
    evaluate(config, args.out, args.checkpoint, args.seed)


def _common(parser, checkpoint=False):
    parser.add_argument('--config',
                        help='INI configuration file (defaults apply to'
                             ' keys not given)')
    parser.add_argument('--out',
                        required=True,
                        help='Output directory')
    parser.add_argument('--seed',
                        type=int,
                        help='Override the command seed')
    if checkpoint:
        parser.add_argument('--checkpoint',
                            help='Model checkpoint for the panos controller')


def parser():
    description = metadata.description + ' ' + metadata.version
    main_parser = argparse.ArgumentParser(prog=metadata.package,
                                          description=description)
    main_parser.add_argument('--version', action='version',
                             version=metadata.identity)
    sub = main_parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('collect', help='Simulate rollouts, write dataset')
    _common(p)
    p.set_defaults(func=_collect)

    p = sub.add_parser('train', help='Train on a dataset, write checkpoint')
    p.add_argument('dataset', help='Dataset file written by collect')
    _common(p)
    p.set_defaults(func=_train)

    p = sub.add_parser('compare', help='Controller comparison trial matrix')
    _common(p, checkpoint=True)
    p.set_defaults(func=_compare)

    p = sub.add_parser('pca-report', help='Proprioception PCA per group')
    p.add_argument('paths', nargs='*',
                   help='Runlog or dataset files (simulated when omitted)')
    _common(p)
    p.set_defaults(func=_pca_report)

    p = sub.add_parser('eval', help='Single closed-loop trial')
    _common(p, checkpoint=True)
    p.set_defaults(func=_eval)

    return main_parser


def main(argv):
    args = parser().parse_args(argv[1:])
    try:
        config = load_config(args.config)
        GetLogger().configure(config)
        args.func(args, config)
    except Error as e:
        if log.debug_mode():
            log.debug(traceback.format_exc())
        log.error('%s: %s' % (e.__class__.__name__, e))
        print('panos %s: %s' % (args.command, e), file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        # Unreadable or unwritable paths, invalid PANOS_LOG_LEVEL.
        print('panos %s: %s' % (args.command, e), file=sys.stderr)
        return 1
    return 0


def entry_point():
    """Zero-argument entry point for use with setuptools/distribute."""
    raise SystemExit(main(sys.argv))


if __name__ == '__main__':
    entry_point()
