"""Exact computations for spherical, periodic and K-theoretic models of affine Hecke modules."""
from __future__ import annotations

from .rootdata import RootDatum, build_root_datum
from .scalars import Laurent, TorusFunction

__all__ = ["RootDatum", "build_root_datum", "Laurent", "TorusFunction"]
__version__ = "0.1.0"
