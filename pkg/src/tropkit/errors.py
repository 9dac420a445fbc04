"""Exception hierarchy shared by all tropkit modules."""


class TropkitError(Exception):
    """Base class for all tropkit errors."""


class DomainError(TropkitError):
    """The inputs are well-formed but the operation is undefined on them."""


class InputError(TropkitError):
    """Malformed input: bad JSON, bad rational literal, schema violation."""


class EmptyCurve(DomainError):
    """Raised when a corner locus is requested for a polynomial whose
    tropical function is affine (fewer than two active terms)."""
