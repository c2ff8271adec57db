"""Exception hierarchy shared by every charvar module.

All package errors derive from :class:`CharvarError` so callers (CLI,
HTTP service) can map the whole family to a diagnostic in one place.
Errors caused by bad input additionally derive from ``ValueError``.
"""


class CharvarError(Exception):
    """Base class for all charvar errors."""


class NotDivisibleError(CharvarError):
    """Exact polynomial division left a nonzero remainder.

    Every polystable-stratum polynomial must be divisible by (x-1)^r, so
    seeing this from the pipeline means a computation bug, not bad input.
    """


class OrderMismatchError(CharvarError, ValueError):
    """Two truncated series of different orders were combined."""


class NonUnitConstantTermError(CharvarError, ValueError):
    """Series inversion/logarithm requires constant term exactly 1."""


class NonZeroConstantTermError(CharvarError, ValueError):
    """Series exponential / Adams operator requires constant term 0."""


class InvalidQueryError(CharvarError, ValueError):
    """Query parameters out of range or inconsistent with each other."""


class PartitionSyntaxError(CharvarError, ValueError):
    """Partition expression does not match ``PART (SPACE PART)*``."""


class SumMismatchError(CharvarError, ValueError):
    """Partition parts do not sum to the requested n."""


class ZeroPartError(CharvarError, ValueError):
    """Partition expression contains a part size or exponent of 0."""


class TooLargeError(CharvarError, ValueError):
    """Finite-field enumeration would exceed the brute-force guard."""


class NonIntegerOrbitCountError(CharvarError):
    """Absolutely-irreducible tuple count not divisible by |PGL_n(F_q)|.

    The PGL action on absolutely irreducible tuples is free, so a
    non-integer orbit count signals a bug in the irreducibility test.
    """
