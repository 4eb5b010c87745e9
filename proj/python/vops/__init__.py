"""Voltage operations on premaniplexes.

Thin re-export of the compiled module; see the C++ headers for the full
documentation of each operation.
"""

from vops._core import *  # noqa: F401,F403
from vops._core import __doc__  # noqa: F401
