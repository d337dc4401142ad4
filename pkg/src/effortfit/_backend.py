"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python ``_purepy`` module takes over. Both produce identical numbers,
the fallback is just slower. ``use_backend`` switches at runtime (tests and
the benchmark use it).
"""

from contextlib import contextmanager

from effortfit import _purepy

try:
    from effortfit import _kernels
except ImportError:  # extension not built
    _kernels = None

BACKENDS = {"python": _purepy}
if _kernels is not None:
    BACKENDS["native"] = _kernels

NATIVE_AVAILABLE = _kernels is not None

_active = _kernels if _kernels is not None else _purepy


def kernels():
    return _active


def backend_name():
    return "native" if _active is _kernels and _kernels is not None else "python"


def set_backend(name):
    global _active
    try:
        _active = BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable backend {name!r}; available: {sorted(BACKENDS)}") from None


@contextmanager
def use_backend(name):
    previous = backend_name()
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)
