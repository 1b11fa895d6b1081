"""Enumeration caps.

Exhaustive routines check their input size against these limits and raise
:class:`~toricposets.errors.CapExceeded` rather than running for hours.
"""

from contextlib import contextmanager

from .errors import CapExceeded

DEFAULT_MAX_VERTICES = 10
# Bell(9) = 21147 partitions; Bell(10) is where face lattices become slow.
DEFAULT_MAX_PARTITION_VERTICES = 9

_limits = {
    "max_vertices": DEFAULT_MAX_VERTICES,
    "max_partition_vertices": DEFAULT_MAX_PARTITION_VERTICES,
}


def get_limit(name):
    return _limits[name]


def set_limit(name, value):
    if name not in _limits:
        raise KeyError(name)
    if value < 1:
        raise ValueError(f"{name} must be positive")
    _limits[name] = int(value)


@contextmanager
def limits(**overrides):
    saved = dict(_limits)
    try:
        for name, value in overrides.items():
            set_limit(name, value)
        yield
    finally:
        _limits.clear()
        _limits.update(saved)


def check_cap(n, what="vertices", name="max_vertices"):
    cap = _limits[name]
    if n > cap:
        raise CapExceeded(f"{what}: {n} exceeds cap {cap} (raise {name} explicitly)")
