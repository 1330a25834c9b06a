"""Exception hierarchy."""


class SemiringError(Exception):
    pass


class ContextError(SemiringError, TypeError):
    """Operands belong to different semirings or have incompatible shapes."""


class DomainError(SemiringError, ValueError):
    """A value lies outside the carrier of its semiring."""


class NotInvertibleError(SemiringError, ArithmeticError):
    pass


class DivergenceError(SemiringError, ArithmeticError):
    """A Kleene star series or ``A*b`` has no finite supremum."""


class UnsupportedSemiringError(SemiringError, ValueError):
    pass


class NotAnEigenvalueError(SemiringError, ValueError):
    pass


class NotASolutionError(SemiringError, ValueError):
    pass
