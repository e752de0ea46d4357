"""Exact polynomial-triangle toolkit: coefficients of integral powers of a
weight polynomial, their identity catalogue, column generating functions,
combinatorial oracles and entropy asymptotics.

Exact values come back as ``fractions.Fraction``; weight vectors accept
ints, strings like ``"1/2"``, or ``Fraction`` instances.
"""

from polytri._core import *  # noqa: F401,F403
from polytri._core import __doc__ as _core_doc  # noqa: F401
from polytri._core import __all__ as __all__  # noqa: F401
