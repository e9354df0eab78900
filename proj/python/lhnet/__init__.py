"""Long Hop networks: Cayley graphs over Z_2^d built from binary linear codes."""

from ._lhnet import *  # noqa: F401,F403
from ._lhnet import LhError, GeneratorSet, bisection, default_database, design

__all__ = [name for name in dir() if not name.startswith("_")]
