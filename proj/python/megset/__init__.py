"""Minimum monitoring edge-geodetic sets: exact, interval, and greedy solvers."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
