"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-numpy fallback
is bit-identical, just slower.  Set FERMIEX_BACKEND=python or
FERMIEX_BACKEND=compiled to force a choice (the latter fails loudly when the
extension is missing).
"""

import os

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_requested = os.environ.get("FERMIEX_BACKEND", "auto").lower()
if _requested not in ("auto", "compiled", "python"):
    raise RuntimeError(
        f"FERMIEX_BACKEND must be auto, compiled or python, got {_requested!r}"
    )
if _requested == "compiled" and _compiled is None:
    raise RuntimeError("FERMIEX_BACKEND=compiled but the extension is not built")

if _requested == "python" or _compiled is None:
    _active = _kernels_py
    _name = "python"
else:
    _active = _compiled
    _name = "compiled"

signed_permutation_sum = _active.signed_permutation_sum


def backend_name() -> str:
    """Active kernel backend: 'compiled' or 'python'."""
    return _name


def compiled_available() -> bool:
    return _compiled is not None
