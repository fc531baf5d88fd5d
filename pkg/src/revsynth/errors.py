"""Exception types shared across the toolkit."""


class RevsynthError(Exception):
    """Base class for domain errors (CLI maps these to exit code 1)."""


class FormatError(RevsynthError):
    """Malformed circuit / function / esop / LP text."""


class CostModelError(RevsynthError):
    """Cost model has no entry for a gate the library can produce."""


class CensusWidthError(RevsynthError):
    """Exhaustive census requested beyond the supported width."""


class InfeasibleAtBudgetError(RevsynthError):
    """No ESOP exists within the requested cube budget."""


class SearchBudgetError(RevsynthError):
    """Bidirectional point query ran out of its state-memory budget."""
