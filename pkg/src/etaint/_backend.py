"""Selects the quadrature kernel backend at import time.

The compiled Cython core is preferred; the pure-Python twin is the
fallback.  ETAINT_PURE=1 forces the fallback (useful for testing and
benchmarking the two implementations against each other).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("ETAINT_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND_NAME

eta_point = _impl.eta_point
eta3_point = _impl.eta3_point
kernel_weight = _impl.kernel_weight
integrand = _impl.integrand
panel = _impl.panel


def available_backends() -> dict[str, object]:
    """Map backend name -> kernel module, for tests and benchmarks."""
    out: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels  # type: ignore[attr-defined]

        out["compiled"] = _ckernels
    except ImportError:
        pass
    return out
