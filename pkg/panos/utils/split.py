# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).


def split_by_n(text, n):
    """Yield consecutive pieces of text no longer than n.

    Empty text yields one empty piece.
    """
    yield text[:n]
    for start in range(n, len(text), n):
        yield text[start:start + n]


def list_of_lines(text):
    """Lines of str or UTF-8 bytes, split on newline only."""
    if isinstance(text, bytes):
        text = text.decode('UTF-8')
    return text.split('\n')


def chunks(items, n):
    """Split a list into consecutive slices of at most n items.

    >>> chunks([1, 2, 3, 4, 5], 2)
    [[1, 2], [3, 4], [5]]
    """
    return [items[i:i + n] for i in range(0, len(items), n)]
