"""Exception types raised by the library."""


class LPAError(Exception):
    """Base class for domain errors (bad input, unmet preconditions)."""


class GraphError(LPAError):
    pass


class WalkError(LPAError):
    pass


class BasisError(LPAError):
    pass


class RepError(LPAError):
    pass


class ReductionError(LPAError):
    pass


class ParseError(LPAError):
    """Syntax or name error in an element expression.

    ``line`` and ``column`` are 1-based.
    """

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class NotUnitary(LPAError):
    """Raised when an element fails one of the unitary classification checks.

    ``check`` names the check that failed.
    """

    def __init__(self, check, detail=""):
        msg = f"not unitary: {check}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.check = check
        self.detail = detail
