# SPDX-License-Identifier: Apache-2.0
"""Rearrangement / Orlicz / Kruglov calculus toolkit (python bindings)."""

try:  # installed layout: rok/_rok.*.so
    from . import _rok as _impl
except ImportError:  # in-build layout: _rok.*.so on sys.path
    import _rok as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
globals().update({name: getattr(_impl, name) for name in __all__})
