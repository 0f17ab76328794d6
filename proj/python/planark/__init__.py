"""Planar k-uniform quantum states: circle blocks, planar orthogonal arrays,
and verification oracles backed by the C++ core."""

from ._planark import *  # noqa: F401,F403
from ._planark import __version__  # noqa: F401
