"""Exception hierarchy shared by every module."""


class WittError(Exception):
    """Base class for library errors."""


class RingMismatch(WittError, ValueError):
    """Operands live in different rings, algebras or Witt lengths."""


class NotDivisible(WittError, ArithmeticError):
    """Exact division by a power of pi failed."""

    def __init__(self, message, valuation=None, needed=None):
        super().__init__(message)
        self.valuation = valuation
        self.needed = needed


class NotInGhostImage(NotDivisible):
    """A ghost vector has no Witt preimage; ``index`` is the first bad slot."""

    def __init__(self, index, valuation=None, needed=None):
        super().__init__(
            f"ghost vector not in the image of the ghost map at index {index} "
            f"(valuation {valuation} < {needed})",
            valuation,
            needed,
        )
        self.index = index


class NotAFrobeniusLift(WittError, ValueError):
    def __init__(self, generator, witness):
        super().__init__(
            f"image of {generator} is not congruent to {generator}^q mod pi; "
            f"residue of the difference is {witness}"
        )
        self.generator = generator
        self.witness = witness


class ParseError(WittError, ValueError):
    def __init__(self, message, position, text=""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.text = text


class IntegralityError(WittError, ArithmeticError):
    """A term of the explicit P_n recursion was not pi-integral."""


class BudgetExceeded(WittError, RuntimeError):
    def __init__(self, message, trials=None):
        super().__init__(message)
        self.trials = trials


class BoundExceeded(WittError, ValueError):
    pass


class UnknownSuite(WittError, KeyError):
    pass


class IncompatibleRing(WittError, ValueError):
    pass
