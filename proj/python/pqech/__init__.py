"""Exact ECH combinatorics of prequantization bundles over the sphere and torus."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
