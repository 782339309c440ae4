"""Kernel backend selection.

The compiled Cython extension is preferred when importable; otherwise the
NumPy kernels take over. Force a choice with QRSUMS_BACKEND={cython,python}
(useful for running the test suite or benchmarks against a specific one).
"""

import os
from types import ModuleType

ENV_VAR = "QRSUMS_BACKEND"
_NAMES = ("cython", "python")


def load_backend(name: str) -> ModuleType:
    if name == "cython":
        from . import _ckernel

        return _ckernel
    if name == "python":
        from . import _pykernel

        return _pykernel
    raise ValueError(f"unknown backend {name!r}; expected one of {_NAMES}")


def _select() -> ModuleType:
    forced = os.environ.get(ENV_VAR)
    if forced:
        return load_backend(forced)
    try:
        return load_backend("cython")
    except ImportError:
        return load_backend("python")


kernel = _select()
BACKEND = kernel.BACKEND_NAME


def get(name: str | None = None) -> ModuleType:
    """The active kernel module, or a specific backend by name."""
    return kernel if name is None else load_backend(name)


def available_backends() -> list[str]:
    out = []
    for name in _NAMES:
        try:
            load_backend(name)
        except ImportError:
            continue
        out.append(name)
    return out
