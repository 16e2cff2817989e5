"""Nonlocality analysis of pure symmetric three-qubit states.

Thin package wrapper around the C++ extension module.
"""

from ._qsym3 import *  # noqa: F401,F403
from ._qsym3 import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
