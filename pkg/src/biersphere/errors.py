"""Exception types shared across the package."""


class BierError(Exception):
    """Base class for all library-specific errors."""


class InvalidComplex(BierError):
    """Facet data does not describe a simplicial complex."""


class MTooLarge(BierError):
    """Ground set exceeds what the bitmask representation supports."""


class BadM(BierError):
    """Ground-set size outside an operation's documented range."""


class LinkOfNonFace(BierError):
    """link() was asked for a vertex set that is not a face."""


class OverlappingGroundSets(BierError):
    """Cone/suspension apex collides with an existing geometric vertex."""


class DualOfFullSimplex(BierError):
    """The full simplex has no minimal non-faces, hence no Alexander dual."""


class NoVertices(BierError):
    """Operation requires at least one geometric vertex."""


class MissingVertexAssignment(BierError):
    """A characteristic map does not cover every geometric vertex."""


class TooLargeForOracle(BierError):
    """Exhaustive Buchstaber search is only run on small complexes."""


class NotChordalBier(BierError):
    """Stacked realizations exist only for chordal Bier spheres."""


class BadSchedule(BierError):
    """A scheduled facet is absent from the current complex."""
