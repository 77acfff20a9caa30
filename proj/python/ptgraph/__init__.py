"""Exact-arithmetic laboratory for Peisert-type graphs over F_{q^2}."""

import importlib

try:
    _impl = importlib.import_module("._ptgraph", __name__)
except ImportError:  # build-tree layout: extension module alongside on sys.path
    _impl = importlib.import_module("_ptgraph")

globals().update({k: v for k, v in vars(_impl).items() if not k.startswith("_")})
__all__ = sorted(k for k in vars(_impl) if not k.startswith("_"))
