"""Exception hierarchy shared by the library and the command line."""


class ParindError(Exception):
    """Base class for all errors raised by parind."""


class InputError(ParindError, ValueError):
    """Malformed user input: bad datum spec, unknown subset name, bad character."""


class PreconditionError(ParindError, ValueError):
    """An operation was called outside its domain (e.g. ``w`` not in ``D_{I,K}``)."""


class ModeError(ParindError, ValueError):
    """Formal and concrete characters were mixed, or concrete mode lacks a prime."""
