"""Exception types shared across the package."""


class NotReducedError(ValueError):
    """Word does not have minimal length for the permutation it expresses."""


class LetterRangeError(ValueError):
    """Generator index outside 1..rank-1."""


class QuadraticRuleError(ValueError):
    """Word (or its commutation class) contains a factor `a a`."""


class InvalidSiteError(ValueError):
    """Move site does not match the word it is applied to."""


class ExplosionGuardError(RuntimeError):
    """Enumeration exceeded the configured state cap."""

    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded the state cap of {cap}")
        self.cap = cap


class ShapeMismatchError(ValueError):
    """Heap of a word is not isomorphic to the declared shape poset."""


class NotABraidHookError(ValueError):
    """The given k is not a braid hook of the tableau."""


class ShapeConditionError(ValueError):
    """Shape fails a precondition (justification mode, first/last row sizes)."""


class DisconnectedShapeError(ValueError):
    """Skew shape has consecutive rows without a shared column edge."""


class NotABraidError(ValueError):
    """The given position is not the centre of a braid factor in the word."""


class NoPreimageError(ValueError):
    """Word has no preimage under the moving-window bijection."""


class PosetBoundsError(ValueError):
    """Poset lacks the unique minimum or maximum this operation needs."""


class TrivialIdealError(ValueError):
    """Order ideal is empty or the whole poset."""


class NotADescentError(ValueError):
    """Element is not a descent of the linear extension for the ideal."""


class UnknownTheoremError(ValueError):
    """Verification id not recognised by the command line front end."""
