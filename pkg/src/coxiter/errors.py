"""Exception hierarchy shared by all coxiter modules."""


class CoxIterError(Exception):
    """Base class for every error raised by coxiter."""


class DatumError(CoxIterError, ValueError):
    """A ring datum violates one of its structural invariants."""


class DegenerateCoefficients(DatumError):
    pass


class EmptyBlock(DatumError):
    pass


class NonpositiveExponent(DatumError):
    pass


class TooFewBlocks(DatumError):
    pass


class WrongType(CoxIterError, TypeError):
    """Operation applied to a datum of the other ring type."""


class NotRational(CoxIterError, ValueError):
    pass


class NotGcdOrdered(CoxIterError, ValueError):
    pass


class NotOrdered(CoxIterError, ValueError):
    """Blocks are not in the order an operation requires."""


class NotHyperplatonic(CoxIterError, ValueError):
    pass


class Factorial(CoxIterError, ValueError):
    """No Cox ring step exists because the ring is already factorial."""


class NonRationalStep(CoxIterError):
    """Iteration hit a non-rational ring, so no Cox ring chain exists."""

    def __init__(self, step, datum=None):
        super().__init__(f"ring at step {step} is not rational")
        self.step = step
        self.datum = datum


class StepLimitExceeded(CoxIterError):
    pass


class UnclassifiableChain(CoxIterError):
    """A bpt sequence fits none of the known chain families."""


class ParseError(CoxIterError, ValueError):
    """Malformed datum document; ``path`` points at the offending field."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
        self.message = message
