"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for all errors raised by this package."""


class MalformedTable(ToolkitError):
    """An operation table has the wrong shape or an out-of-range entry."""


class GuardBreach(ToolkitError):
    """A configured resource bound would be exceeded."""


class SizeGuard(GuardBreach):
    """A carrier would exceed the configured maximum size."""


class EnumGuard(GuardBreach):
    """An enumeration would exceed the configured maximum count."""


class NotIdempotent(ToolkitError):
    """The additive monoid is not idempotent, so no natural order exists."""


class NegationOfTop(ToolkitError):
    """Top has no multiplicative inverse in a tropical semifield."""


class ChainTooShort(ToolkitError):
    """A chain needs at least two elements."""


class NotAnIdeal(ToolkitError):
    """The given subset fails one of the ideal conditions."""


class TooManyVariables(ToolkitError):
    """An equation uses more variables than the evaluator allows."""


class ShapeMismatch(ToolkitError):
    """Matrix shapes are incompatible for the requested operation."""


class ScalarMismatch(ToolkitError):
    """Two structures live over different scalar semirings."""


class NotFreeBasis(ToolkitError):
    """The operation needs a free semimodule with a recorded basis."""


class NoDecomposition(ToolkitError):
    """No coefficient vector expresses the element over the generators."""


class NotCyclic(ToolkitError):
    """The semimodule is not generated by a single element."""


class NotAHom(ToolkitError):
    """The given map fails a homomorphism law."""


class NotOnto(ToolkitError):
    """The homomorphism is not surjective."""


class IllDefinedAction(ToolkitError):
    """A scalar action does not respect the congruence classes."""
