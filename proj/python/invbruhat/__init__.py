"""Bruhat order on involutions of the symmetric group and the classes F_n^A."""

from ._core import *  # noqa: F401,F403
from ._core import InvBruhatError, Permutation

__all__ = [name for name in dir() if not name.startswith("_")]
