"""Exception hierarchy and the cell-count explosion guard."""

DEFAULT_CELL_CAP = 5_000_000


class CubesetError(Exception):
    """Base class for all library errors."""


class MalformedInput(CubesetError):
    """Structurally invalid data: bad indices, dimension mismatches, bad files."""


class RackAxiomError(CubesetError):
    """A candidate rack table violates bijectivity or the rack identity."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GroupAxiomError(CubesetError):
    """A candidate multiplication table is not a group."""


class TrunkError(CubesetError):
    """Inconsistent trunk data (square corners do not match)."""


class CellBudgetExceeded(CubesetError):
    """A construction would exceed the configured total cell budget."""

    def __init__(self, estimate, cap, what=""):
        msg = f"{what or 'construction'} needs {estimate} cells, cap is {cap}"
        super().__init__(msg)
        self.estimate = estimate
        self.cap = cap


def check_budget(estimate, cap, what=""):
    """Raise CellBudgetExceeded if estimate exceeds cap (cap=None disables)."""
    if cap is not None and estimate > cap:
        raise CellBudgetExceeded(estimate, cap, what)
