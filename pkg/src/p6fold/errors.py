"""Exception types shared by all modules."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of an operation.

    Raised e.g. when inverting a series whose constant term is not 1, when
    reducing a class with stray degree-1/2 parts, or when a bound formula is
    applied outside its validity range.  CLI maps this to exit code 3.
    """


class UnknownIdentityError(KeyError):
    """An identity id that is not in the registry.  CLI exit code 2."""
