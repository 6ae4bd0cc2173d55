"""Divisor correlations, singular series, and zeta moment probes."""

from ._zetamoments import *  # noqa: F401,F403
from ._zetamoments import __doc__ as _core_doc

__all__ = [n for n in dir() if not n.startswith("_")]
__doc__ = _core_doc
