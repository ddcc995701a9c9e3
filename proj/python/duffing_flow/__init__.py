"""Spectral Galerkin toolkit for the damped Duffing-type evolution equation."""

from ._core import *  # noqa: F401,F403
