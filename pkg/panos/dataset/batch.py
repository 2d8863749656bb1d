# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import numpy as np

from panos.core.exceptions import InvalidArgument
from panos.utils.split import chunks


class MiniBatch(object):
    __slots__ = ('sequences', 'batch_id')

    def __init__(self, sequences, batch_id):
        if len(sequences) == 0:
            raise InvalidArgument('mini-batch needs at least one sequence')
        self.sequences = list(sequences)
        self.batch_id = int(batch_id)

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, index):
        return self.sequences[index]

    def __repr__(self):
        return 'MiniBatch(%s, n=%s)' % (self.batch_id, len(self))


def shuffle_batches(sequences, B, seed):
    """Seeded permutation of sequences cut into mini-batches of B.

    The last batch may be short. An empty input gives no batches.
    """
    if B < 1:
        raise InvalidArgument('batch size must be >= 1, got %s' % B)
    order = np.random.default_rng(seed).permutation(len(sequences))
    shuffled = [sequences[i] for i in order]
    return [MiniBatch(chunk, batch_id)
            for batch_id, chunk in enumerate(chunks(shuffled, B))]
