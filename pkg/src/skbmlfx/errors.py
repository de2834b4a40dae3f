"""Exception types shared across the package."""


class SkbmlfxError(Exception):
    """Base class for all package errors."""


class NonFinite(SkbmlfxError):
    """A matrix or vector contains NaN or Inf entries."""


class NotSymmetric(SkbmlfxError):
    """A matrix expected to be symmetric is not (to tolerance)."""


class SingularPencil(SkbmlfxError):
    """Eigenvalue pair sums of a Sylvester coefficient pair are (near) zero."""


class DimensionMismatch(SkbmlfxError):
    """Operand shapes are inconsistent."""


class EmptyAllowedSet(SkbmlfxError):
    """Classification requested over an empty class set."""


class UnknownClass(SkbmlfxError):
    """A class id is not present in the global prototype set."""


class SizeExceedsPrototypes(SkbmlfxError):
    """A sized SKB selection asks for more classes than exist."""


class DuplicateIds(SkbmlfxError):
    """An explicit SKB selection repeats a class id."""


class EmptySkb(SkbmlfxError):
    """An SKB with no classes where one is required."""


class NonPositiveDistance(SkbmlfxError):
    """Path-loss distance or reference distance is not positive."""


class ZeroRate(SkbmlfxError):
    """Latency requested at a non-positive transmission rate."""


class Infeasible(SkbmlfxError):
    """A planner instance violates the average-latency feasibility guard."""


class TooLarge(SkbmlfxError):
    """Brute-force enumeration requested beyond the instance-size cap."""


class MalformedAssignment(SkbmlfxError):
    """An assignment matrix is not one-hot per row."""


class DegenerateDenominator(SkbmlfxError):
    """Penalty lower bound denominator is (near) zero."""


class ConfigInvalid(SkbmlfxError):
    """A configuration violates its invariants."""


class RejectionExhausted(SkbmlfxError):
    """Prototype rejection sampling failed to find a separated point."""


class MalformedHeader(SkbmlfxError):
    """A feature/instance file header is missing or inconsistent."""


class IoFailure(SkbmlfxError):
    """File could not be read or written."""
