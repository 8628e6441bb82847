"""Location management signaling cost models."""

from ._lacost import *  # noqa: F401,F403
from ._lacost import LacostError, __doc__  # noqa: F401

__version__ = "0.1.0"
