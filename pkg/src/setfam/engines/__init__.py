"""Search kernel backends.

The compiled extension is preferred when importable; the pure-Python twin
implements the same traversals and is selected automatically otherwise.
Every kernel entry point accepts ``backend="compiled"|"python"`` overrides
through :func:`backend_module`.
"""

from __future__ import annotations

from ..errors import InfeasibleInstanceError
from . import pykern

try:
    from . import _fastcore  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    _fastcore = None
    HAVE_COMPILED = False

DEFAULT_BACKEND = "compiled" if HAVE_COMPILED else "python"
BACKENDS = ("compiled", "python") if HAVE_COMPILED else ("python",)


def backend_module(name: str | None = None):
    name = name or DEFAULT_BACKEND
    if name == "python":
        return pykern
    if name == "compiled":
        if _fastcore is None:
            raise InfeasibleInstanceError(
                "compiled backend requested but the extension is not built"
            )
        return _fastcore
    raise ValueError(f"unknown backend {name!r} (expected 'compiled' or 'python')")
