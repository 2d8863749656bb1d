# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).
import json
import hashlib

import numpy as np


class _JsonEncoder(json.JSONEncoder):
    def default(self, o):
        if isinstance(o, np.ndarray):
            return o.tolist()
        elif isinstance(o, np.integer):
            return int(o)
        elif isinstance(o, np.floating):
            return float(o)
        elif isinstance(o, bytes):
            return o.decode('utf-8')
        else:
            # Pass to Default Encoder
            return json.JSONEncoder.default(self, o)


def loads(json_text, **kwargs):
    if isinstance(json_text, bytes):
        # JSON requires str not bytes hence decode.
        json_text = json_text.decode('UTF-8')

    return json.loads(json_text, **kwargs)


def dumps(obj, indent=4):
    """Readable JSON with sorted keys (manifests)."""
    return json.dumps(obj, indent=indent, sort_keys=True, cls=_JsonEncoder)


def dumpline(obj):
    """Single line JSON with sorted keys (JSON-lines records).

    Floats are written with repr precision so they read back bit-exact.
    """
    return json.dumps(obj, separators=(',', ':'), sort_keys=True,
                      allow_nan=False, cls=_JsonEncoder)


def digest(obj):
    """SHA-256 hex digest of the canonical JSON of obj.
    """
    return hashlib.sha256(dumpline(obj).encode('UTF-8')).hexdigest()
