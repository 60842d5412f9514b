"""Exception types shared across the package."""


class ValmonError(Exception):
    """Base class for all library errors."""


class InvalidSpec(ValmonError):
    """A series spec violates its invariants (nonpositive or nondecreasing
    exponents, zero coefficient, bad tail rule)."""


class InsufficientPrecision(ValmonError):
    """A computation needed more series terms, a deeper sequence derivation,
    or a larger truncation than the spec or context can supply."""


class IdentityViolation(ValmonError):
    """A derived-sequence identity failed.  Signals an implementation bug,
    never an expected outcome on valid input."""

    def __init__(self, identity, index, detail=""):
        self.identity = identity
        self.index = index
        msg = f"identity {identity!r} failed at index {index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotInMonoid(ValmonError):
    """A rational was required to lie in the value monoid but does not."""


class ZeroPolynomial(ValmonError):
    """The zero polynomial has no leading data."""


class StepLimitExceeded(ValmonError):
    """A reduction exceeded its step cap."""


class IncompleteBasis(ValmonError):
    """Ideal membership was asked of a basis that is not known complete."""


class PolyParseError(ValmonError):
    """Syntax error in polynomial text, with position."""

    def __init__(self, message, pos):
        self.pos = pos
        super().__init__(f"{message} (at position {pos})")


class InternalError(ValmonError):
    """An internal consistency check failed (a bug, not a user error)."""
