"""Exception and warning types shared across the package."""


class HeatcastError(Exception):
    """Base class for all heatcast errors."""


# --- ingestion / design construction ---------------------------------------

class MissingColumn(HeatcastError):
    """A schema-mapped column is absent from the input header."""

    def __init__(self, column, logical_name=None):
        self.column = column
        self.logical_name = logical_name
        detail = f" (logical field {logical_name!r})" if logical_name else ""
        super().__init__(f"column {column!r} not found in header{detail}")


class EmptyInput(HeatcastError):
    """Zero rows parsed from an input file."""


class DegenerateDesign(HeatcastError):
    """Too few usable rows survive design construction."""


# --- numeric domains ---------------------------------------------------------

class DomainError(HeatcastError):
    """Input outside the mathematical domain of an operation."""


class EmptySample(HeatcastError):
    """An empty sample where at least one value is required."""


class ShapeMismatch(HeatcastError):
    """Matrix/vector shapes incompatible with the fitted model."""


class LengthMismatch(HeatcastError):
    """Paired sequences of unequal length."""


# --- boosting ----------------------------------------------------------------

class SingleIterationStall(HeatcastError):
    """Boosting achieved zero in-bag training loss at iteration 1.

    Carries the partially fitted model so callers can still inspect its
    predictions (the stalled model predicts its initial offset plus one tree).
    """

    def __init__(self, message, model=None):
        super().__init__(message)
        self.model = model


class ZeroInfluence(HeatcastError):
    """Every tree is a single leaf; no split ever reduced the loss."""


class UnknownFeature(HeatcastError):
    """Feature name/index not present in the fitted model."""


# --- series / distributions ---------------------------------------------------

class TooShort(HeatcastError):
    """Series too short for the requested operation."""


class ConstantSample(HeatcastError):
    """Sample has zero variance where dispersion is required."""


class AlphaTooSmall(HeatcastError):
    """Calibration index exceeds the number of scores; region would be unbounded."""


class UnboundedRegion(HeatcastError):
    """A prediction region with an infinite half-width was requested."""


# --- CLI / fetch ---------------------------------------------------------------

class NetworkError(HeatcastError):
    """Remote archive unreachable or returned an error."""


class UnknownStation(HeatcastError):
    """Station id not found in the remote archive."""


# --- warnings -------------------------------------------------------------------

class NonStationaryWarning(UserWarning):
    """Fitted AR(1) coefficient has modulus >= 1."""


class CrossedQuantilesWarning(UserWarning):
    """Lower quantile model predicted above the upper one; bounds swapped."""


class MissingTestSetWarning(UserWarning):
    """Boosting ran without a test set; early stopping defaulted to n_trees."""
