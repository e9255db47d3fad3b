"""Exception types shared by the exact-arithmetic kernel."""


class KernelError(Exception):
    """Base class for all kernel failures."""


class ParseError(KernelError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RingMismatchError(KernelError):
    """Operands do not share an identical ring context."""


class CoefficientError(KernelError):
    """Coefficient not representable in the ring's field (e.g. 1/2 mod p with p | 2)."""


class HomogeneityError(KernelError):
    """An operation required a homogeneous ideal and got a non-homogeneous one."""


class CharacteristicError(KernelError):
    """Field characteristic too small for the requested operation."""


class NotSquarefreeError(KernelError):
    """Input polynomial has a repeated factor where a squarefree one is required."""


class BudgetExceededError(KernelError):
    """A computation ran past its configured resource budget.

    This is a first-class outcome, never a partial answer: callers must treat
    it as "too expensive", not "false".
    """

    def __init__(self, stage: str, detail: str = ""):
        msg = f"budget exceeded in {stage}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.stage = stage


class DegenerateInputError(KernelError):
    """A seeded random choice failed its sanity check after all retries."""
