"""Exception hierarchy shared by all bihyper modules."""


class BihyperError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgumentError(BihyperError, ValueError):
    """An argument violates a documented precondition (non-finite input,
    |z| off the unit circle, malformed parameter lists, ...)."""


class PoleError(BihyperError):
    """Gamma evaluated exactly on its pole lattice (non-positive integers)."""


class InfiniteValueError(BihyperError):
    """The requested quantity is a genuine pole (infinite limit)."""


class IndeterminateRatioError(BihyperError):
    """A Gamma ratio with poles in both numerator and denominator; the value
    would require a limit this library does not take."""


class DegenerateParameterError(BihyperError):
    """A series parameter placement produces an interior pole or an
    indeterminate 0*inf term inside the summation range."""


class DivergentSeriesError(BihyperError):
    """The bilateral series diverges for the given parameters and argument."""


class ConditionalRefusedError(BihyperError):
    """The series converges only conditionally and the truncation policy
    does not allow conditional summation."""


class PreconditionError(BihyperError):
    """A verification operation was called outside its stated parameter
    domain; the message names the violated constraint."""


class ConfigError(BihyperError):
    """A sweep configuration document is malformed."""


class UnsatisfiableConstraintError(BihyperError):
    """Rejection sampling for a sweep case failed too many times."""
