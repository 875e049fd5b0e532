"""EVTOL mission energy and battery requirement model (C++ core)."""

from ._evtol import *  # noqa: F401,F403
from ._evtol import __doc__  # noqa: F401

__version__ = "0.1.0"
