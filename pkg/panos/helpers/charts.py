# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
"""Grouped bar charts rendered to SVG.

Geometry is computed here and formatted with fixed precision so the same
data always gives the same bytes.
"""
import math

from panos.core.exceptions import InvalidArgument
from panos.helpers.jinja2 import render_template

PALETTE = ('#1b9e77', '#d95f02', '#7570b3', '#e7298a', '#66a61e',
           '#e6ab02', '#a6761d', '#666666')

WIDTH = 720
HEIGHT = 360
MARGIN_LEFT = 70
MARGIN_RIGHT = 150
MARGIN_TOP = 40
MARGIN_BOTTOM = 60


def _num(value):
    return '%.2f' % value


def nice_ceiling(value):
    """Smallest 1, 2 or 5 times a power of ten not below value.

    >>> nice_ceiling(7.3)
    10.0
    >>> nice_ceiling(0.42)
    0.5
    """
    if value <= 0:
        return 1.0
    exponent = math.floor(math.log10(value))
    for step in (1.0, 2.0, 5.0, 10.0):
        candidate = step * 10.0 ** exponent
        if candidate >= value * (1 - 1e-12):
            return float(candidate)
    return float(10.0 ** (exponent + 1))


def bar_chart(title, groups, series, values, y_label):
    """SVG text of a grouped bar chart.

    Args:
        title (str): Chart title.
        groups (list): Group labels along the x axis.
        series (list): Series labels, one bar per series in each group.
        values (list): values[s][g] for series s in group g, >= 0.
        y_label (str): Y axis label.
    """
    if not groups or not series:
        raise InvalidArgument('chart needs groups and series')
    if len(values) != len(series) or any(len(row) != len(groups)
                                         for row in values):
        raise InvalidArgument('values must be series x groups')

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    top = nice_ceiling(max(max(row) for row in values))
    group_w = plot_w / len(groups)
    bar_w = group_w * 0.8 / len(series)

    bars = []
    for s, row in enumerate(values):
        for g, value in enumerate(row):
            h = plot_h * max(value, 0.0) / top
            x = MARGIN_LEFT + g * group_w + group_w * 0.1 + s * bar_w
            bars.append({'x': _num(x), 'y': _num(MARGIN_TOP + plot_h - h),
                         'w': _num(bar_w), 'h': _num(h),
                         'color': PALETTE[s % len(PALETTE)],
                         'label': '%s %s: %.4g' % (series[s], groups[g],
                                                   value)})

    ticks = []
    for k in range(6):
        value = top * k / 5
        ticks.append({'y': _num(MARGIN_TOP + plot_h - plot_h * k / 5),
                      'label': '%.4g' % value})

    labels = [{'x': _num(MARGIN_LEFT + (g + 0.5) * group_w),
               'text': group} for g, group in enumerate(groups)]
    legend = [{'y': _num(MARGIN_TOP + 18 * s),
               'color': PALETTE[s % len(PALETTE)],
               'text': name} for s, name in enumerate(series)]

    return render_template('bar_chart.svg',
                           title=title,
                           y_label=y_label,
                           width=WIDTH,
                           height=HEIGHT,
                           left=MARGIN_LEFT,
                           right=_num(WIDTH - MARGIN_RIGHT),
                           top=MARGIN_TOP,
                           bottom=_num(MARGIN_TOP + plot_h),
                           legend_x=_num(WIDTH - MARGIN_RIGHT + 15),
                           bars=bars,
                           ticks=ticks,
                           labels=labels,
                           legend=legend)


def write_bar_chart(path, *args, **kwargs):
    """Render :func:`bar_chart` to path. Returns path."""
    svg = bar_chart(*args, **kwargs)
    with open(path, 'w', encoding='UTF-8', newline='\n') as f:
        f.write(svg)
    return path
