"""Exception hierarchy shared by every arcflow module."""


class ArcflowError(Exception):
    """Base class for all domain errors raised by this package."""


class EmptyInput(ArcflowError):
    """An operation that needs a nonempty set received an empty one."""


class RangeError(ArcflowError):
    """A scalar argument lies outside its documented domain."""


class HypothesisViolated(ArcflowError):
    """A precondition of a gated construction fails; the message names the predicate."""


class ShapeError(ArcflowError):
    """A function argument is not of the required shape (e.g. not symmetric nonincreasing)."""


class AxisMismatch(ArcflowError):
    """The reference interval passed to a polarization step is not a single arc."""


class ScaleOutOfRange(ArcflowError):
    """A flow scale lies outside [1, terminal scale]."""


class NotAdmissible(ArcflowError):
    """The measure triple is not admissible."""


class EtaTooLarge(ArcflowError):
    """The requested strictness level exceeds the triple's exact maximum."""


class MixedModulus(ArcflowError):
    """Cyclic-group sets with different moduli were combined."""


class Infeasible(ArcflowError):
    """A discrete search was requested with impossible parameters."""


class MaxStepsExceeded(ArcflowError):
    """An iterative procedure hit its step budget before reaching tolerance."""


class ScheduleStall(ArcflowError):
    """The measure-equalization schedule could not pick a valid step."""
