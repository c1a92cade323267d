"""Exception hierarchy for the quintary lattice toolkit."""

from typing import Any, Optional, Tuple


class QuintaryError(Exception):
    """Base exception for every domain error raised by this package."""

    pass


class LatticeSpecError(QuintaryError):
    """Exception raised for malformed or unsupported lattice specifications."""

    pass


class LatticeAxiomError(LatticeSpecError):
    """Exception raised when a finite table violates a lattice axiom.

    Attributes:
        axiom: Name of the violated axiom
        witness: Element indices exhibiting the violation
    """

    def __init__(self, axiom: str, witness: Tuple[int, ...]) -> None:
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"lattice axiom '{axiom}' violated at indices {witness}")


class LatticeMismatchError(QuintaryError):
    """Exception raised when an element does not belong to the lattice in use."""

    def __init__(self, lattice_name: str, element: Any) -> None:
        self.lattice_name = lattice_name
        self.element = element
        super().__init__(f"element {element!r} does not belong to {lattice_name}")


class ArithmeticOverflowError(QuintaryError):
    """Exception raised when an arithmetic result leaves the 64-bit range."""

    pass


class EnumerationError(QuintaryError):
    """Exception raised when a carrier cannot be enumerated within budget."""

    pass


class FieldError(QuintaryError):
    """Exception raised for invalid finite-field parameters or vectors."""

    pass


class DomainError(QuintaryError):
    """Exception raised when an operation's precondition is not met."""

    def __init__(self, message: str, value: Optional[Any] = None) -> None:
        self.value = value
        super().__init__(message)
