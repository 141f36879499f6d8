"""Custom error classes for quasisoft-cli"""

from typing import Optional, Sequence

from quasisoft_cli.schemas import LatinDefect


class QuasiSoftError(Exception):
    """Base exception for quasisoft-cli errors"""

    pass


class TableParseError(QuasiSoftError):
    """Raised when a table or soft-set file is malformed"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LatinViolation(QuasiSoftError):
    """Raised when a Cayley table is not a Latin square"""

    def __init__(self, defects: Sequence[LatinDefect]):
        self.defects = list(defects)
        super().__init__(f"table is not a Latin square ({len(self.defects)} defects)")


class PreconditionError(QuasiSoftError):
    """Raised when an operation is called outside its precondition"""

    pass


class EmptySubsetError(PreconditionError):
    """Raised when an empty subset is given where H or F(a) is expected"""

    def __init__(self, message: str = "subset must be non-empty"):
        super().__init__(message)


class UniverseMismatchError(PreconditionError):
    """Raised when two objects live over carriers of different size"""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"universe mismatch: {left} != {right}")


class EmptySoftSetError(QuasiSoftError):
    """Raised when a soft-set operation would leave no non-empty value"""

    def __init__(self, message: str, dropped: Sequence[str] = ()):
        self.dropped = tuple(dropped)
        super().__init__(message)


class NotAGroupError(PreconditionError):
    """Raised when a group table is required"""

    def __init__(self, message: str = "base table is not a group"):
        super().__init__(message)


class NotDistributiveError(PreconditionError):
    """Raised when a distributive base is required"""

    def __init__(self, message: str = "base quasigroup is not distributive"):
        super().__init__(message)


class NotNormalError(PreconditionError):
    """Raised when a soft value is not a normal subquasigroup"""

    def __init__(self, message: str, parameter: Optional[str] = None):
        self.parameter = parameter
        super().__init__(message)


class PartitionError(QuasiSoftError):
    """Raised when blocks do not partition the carrier"""

    pass


class CongruenceError(QuasiSoftError):
    """Raised when a quotient by a partition is not well defined"""

    pass


class BoundExceededError(QuasiSoftError):
    """Raised when an exhaustive search would exceed its configured bound"""

    def __init__(self, what: str, size: int, bound: int):
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: carrier size {size} exceeds bound {bound}")


class ConfigurationError(QuasiSoftError):
    """Raised when configuration is invalid"""

    def __init__(self, message: str, field: Optional[str] = None):
        self.field = field
        super().__init__(message)


class FixtureError(QuasiSoftError):
    """Raised when a built-in fixture cannot be resolved"""

    def __init__(self, message: str, name: Optional[str] = None):
        self.name = name
        super().__init__(message)
