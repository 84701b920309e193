"""
Domain exceptions raised by the simulator.

Everything derives from SimulationError so the CLI can map a whole family of
failures to one exit status.  None of these subclass ValueError: pydantic only
wraps ValueError / AssertionError raised inside validators, so our own errors
reach the caller with their type intact.
"""


class SimulationError(Exception):
    """Base class for every validation failure in the numeric core."""


class DimensionMismatchError(SimulationError):
    """Operands have incompatible shapes."""


class InvalidStateError(SimulationError):
    """A matrix is not Hermitian, not PSD, or not unit-trace."""


class CPTPViolationError(SimulationError):
    """Kraus operators do not satisfy sum K^dag K = I."""


class NormalizationError(SimulationError):
    """Amplitudes or state vectors are not normalized."""


class NonUnitaryError(SimulationError):
    """A coin or correction operator is not unitary."""


class ParameterRangeError(SimulationError):
    """A channel parameter or index lies outside its allowed range."""


class BoundaryOverflowError(SimulationError):
    """A walk step would push amplitude off the finite lattice."""


class MissingCorrectionError(SimulationError):
    """A positive-probability outcome has no correction unitary."""


class ConfigurationError(Exception):
    """A scenario is missing an input file or names something unknown.

    Kept outside SimulationError: the CLI treats it like a parse failure.
    """
