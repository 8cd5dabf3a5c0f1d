"""Exception types shared across the package.

The CLI maps these onto exit statuses: ``InputError`` -> 2,
``CapacityError`` -> 3.
"""


class SpexError(Exception):
    pass


class InputError(SpexError, ValueError):
    """Bad parameters or malformed input (graph6 text, catalog names, ...)."""


class CapacityError(SpexError):
    """The requested object exceeds a documented size limit."""


class NumericError(SpexError, ArithmeticError):
    pass
