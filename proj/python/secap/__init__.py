"""Secrecy capacity of spatially-constrained multi-antenna systems."""

from ._secap import *  # noqa: F401,F403
from ._secap import __version__  # noqa: F401
