"""Exact counting and construction of correspondence colourings.

The heavy lifting lives in the compiled extension ``corrcount._core``;
this package re-exports its surface.  Counts are Python ints, rationals
are ``fractions.Fraction``, and rational parameters accept Fraction,
int, or ``"p/q"`` strings.
"""

from corrcount._core import *  # noqa: F401,F403
from corrcount._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
