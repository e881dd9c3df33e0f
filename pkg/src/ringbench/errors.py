"""Shared exception types.

The CLI maps these onto its exit codes: parse problems exit 2, resource
ceilings exit 3, everything else that signals a wrong answer exits 1.
"""


class StructuralError(ValueError):
    """Operands live in different rings / fields / algebras."""


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = " at line %d" % line
            if col is not None:
                where += ", col %d" % col
        super().__init__(message + where)


class UnsupportedInputError(ValueError):
    """Input outside an operation's stated domain (non-monomial ideal,
    non-homogeneous ideal, and so on)."""


class NotCofiniteError(ValueError):
    """A quotient expected to be finite dimensional is not; carries the
    variables with no pure power among the lead monomials."""

    def __init__(self, message, missing_vars=()):
        self.missing_vars = tuple(missing_vars)
        super().__init__(message)


class LimitExceededError(RuntimeError):
    """A configurable resource ceiling (pair counts, matrix sizes,
    resolution widths) was hit before the computation finished."""


class InconclusiveError(RuntimeError):
    """The computation ran fine but cannot certify an answer at the
    requested bounds.  Never turned into a guess."""


class InvalidFiberError(ValueError):
    """Fiber-product request outside the covered case table (trivial
    factor, or a regular factor of dimension 0)."""


class IncompleteProfileError(ValueError):
    """A classification predicate needed a flag that is neither computed
    nor declared.  Lists exactly the missing flags."""

    def __init__(self, message, missing=()):
        self.missing = tuple(missing)
        super().__init__(message)
