"""Exception types shared across the library."""


class CombnullError(Exception):
    """Base class for every error this library raises on purpose."""


class InvalidModulus(CombnullError):
    """Modulus smaller than 2."""


class RingMismatch(CombnullError):
    """Operands belong to rings with different moduli."""


class ShapeMismatch(CombnullError):
    """Arity or length disagreement between polynomial-shaped values."""


class ParseError(CombnullError):
    """Polynomial text rejected by the grammar.

    ``position`` is the 0-based character offset at which parsing failed.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class HypothesesViolated(CombnullError):
    """A witness search was requested for an instance whose hypotheses fail."""


class InternalContradiction(CombnullError):
    """A step the underlying theorem guarantees has failed: an implementation bug."""


class PreconditionViolated(CombnullError):
    """Operation invoked outside its stated domain."""
