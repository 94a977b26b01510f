"""Bitmask kernels for cut enumeration.

The compiled Cython module is preferred; the pure-Python twin is used when
the extension is unavailable or when ``EDGE_EXPAND_PURE`` is set in the
environment (useful for testing and benchmarking the fallback).
"""

import os

from . import _pure

if os.environ.get("EDGE_EXPAND_PURE"):
    _impl = _pure
else:
    try:
        from . import _ccore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pure

IMPLEMENTATION = _impl.IMPLEMENTATION
cut_size = _impl.cut_size
min_cut = _impl.min_cut
cuts_below = _impl.cuts_below
