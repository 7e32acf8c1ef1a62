"""Shared exception types."""


class PbwError(Exception):
    """Base class for all workbench errors."""


class AmbientMismatch(PbwError):
    """Two operands live over different generator counts."""


class UndefinedDegree(PbwError):
    """x-degree of the zero polynomial was requested."""


class EmptyCycle(PbwError):
    """A cyclic word must contain at least one letter."""


class BadIndex(PbwError):
    """Generator index outside 1..n."""


class BadTriple(PbwError):
    """A triple of indices with repetitions where distinct ones are required."""


class UnsupportedArity(PbwError):
    """Potential presentations are only defined for three generators."""


class NotDeformation(PbwError):
    """A relation tail is not divisible by hbar."""


class PathMismatch(PbwError):
    """The requested differential constructor does not apply to this presentation."""


class NoObstruction(PbwError):
    """Obstruction extraction requested on a passing certificate."""


class Inhomogeneous(PbwError):
    """A complex element mixes cohomological degrees."""


class FiltrationUnbounded(PbwError):
    """Some relation tail has x-degree > 2, so the total-degree filtration argument is unavailable."""


class BadSpecialization(PbwError):
    """A relation degenerates to zero at the requested parameter value."""

    def __init__(self, pair, value=None):
        self.pair = pair
        self.value = value
        at = f" at h={value}" if value is not None else ""
        super().__init__(f"relation for pair {pair} vanishes identically{at}")


class OutOfRange(PbwError):
    """Query degree exceeds the certified range of a completed system."""


class InputError(PbwError):
    """Malformed input document or option."""
