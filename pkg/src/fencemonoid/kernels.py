"""Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module. Set ``FENCEMONOID_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("FENCEMONOID_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python backend requested")
    from . import _ckernels as _active
except ImportError:
    _active = _pykernels

BACKEND = _active.NAME


def available_backends():
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out


def get_backend(name=None):
    if name is None:
        return _active
    try:
        return available_backends()[name]
    except KeyError:
        raise ValueError(f"backend {name!r} is not available") from None


compose_masks = _active.compose_masks
product_table = _active.product_table
closure = _active.closure
is_closed = _active.is_closed
factor_free = _active.factor_free
strategy_a = _active.strategy_a
strategy_b = _active.strategy_b
layer_requirements = _active.layer_requirements
