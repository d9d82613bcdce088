"""Exception types shared across the package."""


class SnrError(Exception):
    """Base class for every error raised by snrmaps."""


class PartialOrderViolation(SnrError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")


class InvolutionViolation(SnrError):
    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at {witness}")


class CapExceeded(SnrError):
    pass


class ParseError(SnrError):
    def __init__(self, message: str, position: int = 0):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class NotWeighted(SnrError):
    """The map is not in the weighted family the operation requires."""


class NotABasis(SnrError):
    pass


class NotInBnr(SnrError):
    """The partial map disagrees with the fixed signs on the xi/eta strings."""


class InvalidSystem(SnrError):
    pass


class Incompatible(SnrError):
    """The system has no solution."""
