"""Kernel selection.

The compiled kernels are used when importable. Set ``PELLCUBIC_BACKEND``
to ``python`` to force the fallback, or to ``c`` to make a missing
extension an import error.
"""

import importlib
import os

from . import _pykernels

_MODULES = {"c": "pellcubic._ckernels", "python": "pellcubic._pykernels"}


def load(name):
    """Import a kernel module by backend name."""
    try:
        return importlib.import_module(_MODULES[name])
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_MODULES)}") from None


def available():
    names = []
    for name in _MODULES:
        try:
            load(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _select():
    wanted = os.environ.get("PELLCUBIC_BACKEND", "").strip().lower()
    if wanted:
        return load(wanted)
    try:
        return load("c")
    except ImportError:
        return _pykernels


kernels = _select()
