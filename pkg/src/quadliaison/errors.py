"""Exception hierarchy.

InfeasibleError subclasses signal that a requested geometric configuration
cannot exist (negative dimension counts, liaison producing impossible
residual invariants).  InconsistencyError subclasses signal that arithmetic
checks on a proposed resolution failed.  Both carry enough context to
report the first offending twist.
"""

from __future__ import annotations


class QLError(Exception):
    """Base class for all package errors."""


class InfeasibleError(QLError):
    """The requested configuration cannot exist."""


class NegativeDimension(InfeasibleError):
    """A section count came out negative at some twist."""

    def __init__(self, twist: int, value: int, message: str | None = None):
        self.twist = twist
        self.value = value
        super().__init__(
            message
            or f"section count {value} < 0 at twist {twist}: no such curve"
        )


class ResidualNegativeDegree(InfeasibleError):
    """Liaison produced a residual curve of nonpositive degree."""

    def __init__(self, degree: int, message: str | None = None):
        self.degree = degree
        super().__init__(message or f"residual degree {degree} is not positive")


class ResidualNegativeGenus(InfeasibleError):
    """Liaison produced a residual curve of negative genus."""

    def __init__(self, genus: int, message: str | None = None):
        self.genus = genus
        super().__init__(message or f"residual genus {genus} < 0")


class NonIntegralGenus(InfeasibleError):
    """The liaison genus formula did not produce an integer."""

    def __init__(self, numerator: int, message: str | None = None):
        self.numerator = numerator
        super().__init__(
            message or f"genus formula gave non-integer value {numerator}/2"
        )


class NegativeKernelDimension(InfeasibleError):
    """A kernel-bundle section count came out negative at some twist."""

    def __init__(self, twist: int, value: int, message: str | None = None):
        self.twist = twist
        self.value = value
        super().__init__(
            message or f"kernel section count {value} < 0 at twist {twist}"
        )


class InconsistencyError(QLError):
    """An arithmetic cross-check on a resolution failed."""


class MappingConeInconsistent(InconsistencyError):
    """A mapping-cone output failed its section-count consistency check."""

    def __init__(self, twist: int, lhs: int, rhs: int, message: str | None = None):
        self.twist = twist
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            message
            or f"consistency check failed at twist {twist}: {lhs} != {rhs}"
        )


class RangeTooLarge(QLError):
    """An enumeration would exceed the hard candidate cap."""

    def __init__(self, count: int, cap: int, message: str | None = None):
        self.count = count
        self.cap = cap
        super().__init__(
            message or f"enumeration of {count} candidates exceeds cap {cap}"
        )
