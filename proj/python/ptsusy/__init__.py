"""Complex SUSY partner potentials, sl(2,C) families and the Weierstrass pair.

Thin wrapper around the compiled extension; see the project README for the
C++ library and CLI.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
