"""Certified Weil-Petersson gradient and distance bounds."""

from ._core import *  # noqa: F401,F403
from ._core import Bracket, DomainError, ConvergenceError  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
