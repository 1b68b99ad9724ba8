"""Exception hierarchy shared by all floodpoly modules."""


class FloodPolyError(Exception):
    """Base class for every error raised by this package."""


class IndexOutOfRange(FloodPolyError, IndexError):
    pass


class SelfLoop(FloodPolyError, ValueError):
    pass


class TooLarge(FloodPolyError):
    """An exhaustive computation was asked to exceed its configured cap."""


class InvalidParameter(FloodPolyError, ValueError):
    pass


class OutOfRange(FloodPolyError, ValueError):
    pass


class ZeroPolynomial(FloodPolyError, ValueError):
    pass


class PolynomialSyntaxError(FloodPolyError, ValueError):
    pass


class FamilySyntaxError(FloodPolyError, ValueError):
    pass


class GraphFormatError(FloodPolyError, ValueError):
    """Malformed edge-list or graph6 input."""


class MalformedPolynomial(FloodPolyError, ValueError):
    """The polynomial cannot be the flood polynomial of any graph."""


class NotApplicable(FloodPolyError):
    """A structural rewrite has no qualifying vertex in the graph."""
