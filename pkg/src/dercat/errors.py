"""Exception hierarchy shared by every layer of the calculator."""


class DercatError(Exception):
    """Base class; the CLI maps subclasses of InputError to exit code 2."""


class InputError(DercatError, ValueError):
    pass


class ParseError(InputError):
    pass


class WindowExceeded(InputError):
    pass


class SupportExceedsTruncation(InputError):
    pass


class PosetMismatch(InputError):
    pass


class IndexMismatch(InputError):
    pass


class ZeroRepresentation(InputError):
    pass


class NotAnIntertwiner(InputError):
    pass


class NotQuasiSimple(InputError):
    pass


class DifferentComponents(InputError):
    pass


class ZeroMap(InputError):
    pass


class NotUnique(InputError):
    """A cone was requested along a hom space of dimension at least two."""


class MarginTooSmall(DercatError):
    pass


class NotInCatalog(DercatError):
    pass


class Ambiguous(DercatError):
    """Dimension data alone cannot settle a probing decision."""
