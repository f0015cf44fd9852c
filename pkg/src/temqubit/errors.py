"""Exception types shared across the simulator.

Everything derives from SimulationError (a ValueError) so callers can
catch the whole family at once. The CLI maps SimulationError subclasses
to exit code 2 (physics / domain problems), except ColumnParseError
which is a usage problem of the input script and maps to exit code 1.
"""

from __future__ import annotations


class SimulationError(ValueError):
    """Base class for all domain errors raised by this package."""


class PhysicsDomainError(SimulationError):
    """A physical parameter is outside its meaningful domain.

    Examples: non-positive kinetic energy, a drift tube with zero
    field, a negative radial index.
    """


class UnsupportedRangeError(SimulationError):
    """Polynomial or normalization index beyond the supported envelope."""


class ResolutionError(SimulationError):
    """Grid spacing too coarse to resolve the requested waist."""


class GridMismatchError(SimulationError):
    """Two fields live on different grids and cannot be combined."""


class MatchingError(SimulationError):
    """Expansion waist and environment field violate the matching condition."""


class NonUnitaryGateError(SimulationError):
    """A gate matrix failed its unitarity contract."""


class NotALoopError(SimulationError):
    """Gate sequence does not return the start state up to global phase.

    Attributes
    ----------
    overlap_magnitude : float
        The achieved |<start|U|start>|, reported for diagnosis.
    """

    def __init__(self, message: str, overlap_magnitude: float):
        super().__init__(message)
        self.overlap_magnitude = overlap_magnitude


class EmptySubspaceError(SimulationError):
    """Expansion has no usable weight on the two qubit modes.

    Attributes
    ----------
    leakage : float
        Norm of the expansion outside the qubit pair.
    """

    def __init__(self, message: str, leakage: float):
        super().__init__(message)
        self.leakage = leakage


class DumpFormatError(SimulationError):
    """A field or expansion dump file is malformed."""


class ColumnParseError(SimulationError):
    """Column script rejected; carries the offending line number.

    Attributes
    ----------
    line_number : int
        1-based line in the script text (0 when no line applies).
    """

    def __init__(self, message: str, line_number: int = 0):
        super().__init__(f"line {line_number}: {message}" if line_number else message)
        self.line_number = line_number
