"""Max-Welter game engine.

Positions are ascending lists of occupied squares, e.g. ``[1, 2, 5]``.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
