"""Exception types shared across the package.

Every error raised deliberately by raagkit derives from RaagError, so callers
can catch one base class at CLI or library boundaries.
"""


class RaagError(Exception):
    """Base class for all errors raised by this package."""


# -- defining graphs ---------------------------------------------------------

class GraphSyntaxError(RaagError):
    """Graph file text does not match the expected line format."""


class DuplicateVertex(RaagError):
    """The same vertex name appears twice in the vertex list."""


class UnknownVertexInEdge(RaagError):
    """An edge mentions a vertex that was never declared."""


class LoopEdge(RaagError):
    """An edge joins a vertex to itself."""


class UnknownVertex(RaagError):
    """A query names a vertex that is not in the graph (or complex)."""


class TooLargeForExact(RaagError):
    """Exact chromatic number was requested beyond the supported size."""


# -- words -------------------------------------------------------------------

class WordSyntaxError(RaagError):
    """Word text does not parse (bad token or zero exponent)."""


class UnknownGenerator(RaagError):
    """A word uses a generator that is not a vertex of its graph."""


class GraphMismatch(RaagError):
    """Two operands were built over different defining graphs."""


class NotReduced(RaagError):
    """An operation required a reduced word but received one that is not."""


class NotCyclicallyReduced(RaagError):
    """An operation required a cyclically reduced word."""


class EmptyWord(RaagError):
    """An operation required a nonempty word."""


# -- cube calculus -----------------------------------------------------------

class NotInContext(RaagError):
    """A half-space relation was queried outside its context interval."""


class HullTooLarge(RaagError):
    """The vertex hull of a context interval exceeded the configured cap."""


class NotNested(RaagError):
    """A chain was requested between half-spaces that are not nested."""


class ChainTooShort(RaagError):
    """A chain midpoint was requested for a chain with no interior."""


# -- overlap verification ----------------------------------------------------

class TrivialElement(RaagError):
    """Verification was requested for the identity element."""


# -- angled complexes --------------------------------------------------------

class UnknownFace(RaagError):
    """A query names a face that is not in the complex."""


class InconsistentComplex(RaagError):
    """Complex data fails a structural validity check."""


class SideCountBelowFour(RaagError):
    """A face side count below four was passed to the genus defect formula."""
