"""Exception types shared across the library and the CLI."""


class CharkitError(Exception):
    """Base class for errors raised by this package."""


class CapacityError(CharkitError):
    """An enumeration or grid would exceed its configured size limit."""


class DataFormatError(CharkitError):
    """A file or payload violates the documented schema."""


class SinogramError(DataFormatError):
    """A mass table is incomplete or internally inconsistent."""


class HypothesisNotMet(CharkitError):
    """The input does not satisfy the hypothesis the check requires."""


class TheoremViolation(CharkitError):
    """A verified identity failed on valid input.

    This is never expected: it indicates either a bug in the library or a
    genuine counterexample to one of the verified statements, and the CLI
    reports it with a dedicated exit code.
    """
