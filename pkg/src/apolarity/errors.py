"""Exception types shared across the toolkit."""


class ApolarityError(Exception):
    """Base class for every error raised by this package."""


class ZeroInversion(ApolarityError):
    """Inversion of the zero element."""


class NotInvertible(ApolarityError):
    """Inversion failed because the modulus split; carries the discovered factor."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class InvalidExtension(ApolarityError):
    """Declared minimal polynomial is not monic, constant, or not squarefree."""


class VarSetMismatch(ApolarityError):
    """Operands built over different variable sets."""


class FieldMismatch(ApolarityError):
    """Operands built over different coefficient fields."""


class NonHomogeneous(ApolarityError):
    """A homogeneous form was required."""


class ZeroForm(ApolarityError):
    """The zero polynomial was passed where a nonzero form is required."""


class AmbientMismatch(ApolarityError):
    """Subspace or matrix operands live in different ambient dimensions."""


class DuplicatePoint(ApolarityError):
    """Two projective points coincide after normalization."""


class EmptyGeneratorList(ApolarityError):
    """An ideal operation received no generators."""


class DegreeMismatch(ApolarityError):
    """Generators or operands do not share the required degree."""


class TNotInIdeal(ApolarityError):
    """The chosen form t does not lie in the degree-e piece of the ideal."""


class EOutOfRange(ApolarityError):
    """The requested e is outside the admissible range."""


class PointsNotApolar(ApolarityError):
    """A point set fails the apolarity containment I_X within the annihilator."""


class NotBinary(ApolarityError):
    """A form in two essential variables was required."""


class NotMonomial(ApolarityError):
    """A single monomial was required."""


class ParameterOutOfRange(ApolarityError):
    """A family parameter violates its constraint."""


class NotCIShape(ApolarityError):
    """The annihilator is not generated by a length-(n+1) regular sequence as required."""


class HypothesisViolated(ApolarityError):
    """A theorem hypothesis needed for a cited value does not hold."""


class NOutOfRange(ApolarityError):
    """The requested family size n is outside the supported range."""


class MixedDegrees(ApolarityError):
    """Summands of different degrees cannot be combined."""


class UnknownVariable(ApolarityError):
    """An expression used a variable outside the declared variable set."""


class ParseError(ApolarityError):
    """Expression text violates the grammar; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
