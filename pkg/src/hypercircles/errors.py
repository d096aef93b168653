"""Exception hierarchy.

The CLI maps :class:`SchemaError` to exit code 2, :class:`PreconditionError`
(and the rest of :class:`HypercircleError`) to 3 and
:class:`InconclusiveError` to 4.
"""


class HypercircleError(Exception):
    """Base class for mathematical errors raised by this package."""


class PreconditionError(HypercircleError):
    """An operation was called on input outside its domain."""


class FieldMismatchError(PreconditionError):
    pass


class InexactDivisionError(PreconditionError):
    pass


class DegenerateUnitError(PreconditionError):
    """ad - bc = 0."""


class UnreachablePointError(PreconditionError):
    """The exceptional point u(oo) of a hypercircle has no finite preimage."""


class NotRationalizedError(PreconditionError):
    """Higher alpha-components did not vanish after a change of parameter."""


class StageError(HypercircleError):
    """A pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage, message):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class InconclusiveError(HypercircleError):
    """A certification could not be completed."""


class ReducibleFieldError(PreconditionError):
    def __init__(self, minpoly, certificate):
        super().__init__(f"defining polynomial is not certified irreducible: {certificate}")
        self.minpoly = minpoly
        self.certificate = certificate


class SchemaError(Exception):
    """Malformed job file."""
