"""Optical response of a VSCPT-prepared atomic gas."""

from ._vscpt import *  # noqa: F401,F403
from ._vscpt import __doc__  # noqa: F401
