"""Exception types shared across the package."""

from __future__ import annotations


class HybridQuatError(Exception):
    """Base class for all errors raised by this package."""


class RepeatedRoot(HybridQuatError):
    """The quadratic x^2 - p*x + q has a double root; no closed form exists."""


class RationalRoots(HybridQuatError):
    """The quadratic splits over the rationals; there is no surd to adjoin."""


class MixedDiscriminant(HybridQuatError):
    """Two values live in different quadratic extensions."""


class DivisionByZero(HybridQuatError):
    """Exact division by zero."""


class NegativeIndexWithZeroQ(HybridQuatError):
    """Backward recurrence needs q != 0 to solve for earlier terms."""
