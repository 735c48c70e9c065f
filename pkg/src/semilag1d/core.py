"""Step-core backend selection.

Imports the compiled extension when present, otherwise the numpy fallback.
``SEMILAG1D_CORE=python`` or ``SEMILAG1D_CORE=compiled`` forces a choice
(the latter raises if the extension is missing, useful in benchmarks).
"""

import os

_requested = os.environ.get("SEMILAG1D_CORE", "").strip().lower()

if _requested in ("", "compiled"):
    try:
        from . import _core_cy as _impl

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _core_np as _impl

        BACKEND = "python"
elif _requested == "python":
    from . import _core_np as _impl

    BACKEND = "python"
else:
    raise RuntimeError(
        f"SEMILAG1D_CORE={_requested!r} not understood; use 'compiled' or 'python'"
    )

step_arrays = _impl.step_arrays


def active_backend() -> str:
    """Name of the step core in use: 'compiled' or 'python'."""
    return BACKEND
