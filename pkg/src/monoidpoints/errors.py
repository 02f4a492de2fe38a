"""Exception hierarchy.

Validation errors carry their witnesses as attributes so callers (and the
CLI) can report exactly which law failed where.
"""


class MonoidPointsError(Exception):
    pass


class ValidationError(MonoidPointsError, ValueError):
    """A table or action violates one of the structure's laws."""

    law = "validation"

    def __init__(self, message, witness=()):
        super().__init__(message)
        self.witness = tuple(witness)


class IndexOutOfRange(ValidationError):
    law = "index_out_of_range"


class NotAssociative(ValidationError):
    law = "associativity"

    def __init__(self, i, j, k, lhs=None, rhs=None):
        super().__init__(
            f"(i*j)*k != i*(j*k) for i={i}, j={j}, k={k} ({lhs} != {rhs})", (i, j, k)
        )
        self.i, self.j, self.k = i, j, k


class IdentityLawFails(ValidationError):
    law = "identity"

    def __init__(self, i):
        super().__init__(f"identity law fails at element {i}", (i,))
        self.i = i


class IdentityActionFails(ValidationError):
    law = "identity_action"

    def __init__(self, a):
        super().__init__(f"identity does not act trivially on {a}", (a,))
        self.a = a


class ActionNotAssociative(ValidationError):
    law = "action_associativity"

    def __init__(self, m, n, a):
        super().__init__(f"action is not associative for m={m}, n={n}, a={a}", (m, n, a))
        self.m, self.n, self.a = m, n, a


class NotACongruence(ValidationError):
    law = "congruence"


class NotCommutative(MonoidPointsError, ValueError):
    pass


class NotASubmonoid(MonoidPointsError, ValueError):
    pass


class NotAnFMonoid(MonoidPointsError, ValueError):
    pass


class NotARightIdeal(MonoidPointsError, ValueError):
    pass


class NotIdempotentIdeal(MonoidPointsError, ValueError):
    pass


class TooLarge(MonoidPointsError):
    """A configured size cap was exceeded."""


class ClosureTooLarge(TooLarge):
    pass


class CarrierTooLarge(TooLarge):
    pass


class TooManyIdeals(TooLarge):
    pass


class OrderTooLarge(TooLarge, ValueError):
    pass


class InvariantViolation(MonoidPointsError, AssertionError):
    """An internal cross-check failed.

    Raised only when a computed result contradicts a theorem the library
    relies on; seeing one means a bug (or a corrupted table), not bad input.
    """


class ClassificationFailed(InvariantViolation):
    pass


class RoundTripFailed(InvariantViolation):
    pass


class BijectionFailed(InvariantViolation):
    pass


class MethodDisagreement(InvariantViolation):
    pass


class ParseError(MonoidPointsError, ValueError):
    """Input file missing, unreadable, or not in the expected JSON shape."""


class OutOfRange(MonoidPointsError, ValueError):
    pass
