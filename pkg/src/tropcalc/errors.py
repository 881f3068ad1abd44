"""Exception hierarchy for tropcalc."""


class TropcalcError(Exception):
    """Base class for all tropcalc errors."""


class NonComplex(TropcalcError):
    """Cells do not intersect in common faces."""


class NotAFacet(TropcalcError):
    """The given cell is not a codimension-one face of the other."""


class Unbounded(TropcalcError):
    """Operation requires a bounded polyhedron."""


class BadRange(TropcalcError):
    """Invalid interval bounds."""


class WrongDimension(TropcalcError):
    """Cycle has the wrong dimension for this operation."""


class DimensionMismatch(TropcalcError):
    """Ambient dimensions do not agree."""


class SlotOutOfRange(TropcalcError):
    """Contraction slot exceeds the form's degree."""


class NotACover(TropcalcError):
    """The given sets do not cover the complex."""


class UnboundedSupport(TropcalcError):
    """Form does not vanish on unbounded directions."""


class BidegreeMismatch(TropcalcError):
    """Form bidegree is incompatible with the region."""


class NotPulledBack(TropcalcError):
    """Form varies in the tube directions."""


class CarrierMismatch(TropcalcError):
    """Piecewise data lives on different carrier complexes."""


class NotPolyhedral(TropcalcError):
    """Image of a PL map is not a polyhedral complex."""


class NoPartition(TropcalcError):
    """No PL partition of unity exists for the cover."""


class Mismatch(TropcalcError):
    """Two independent computations of the same value disagree."""


class ParseError(TropcalcError):
    """Malformed input file."""


class SchemaError(TropcalcError):
    """Input JSON does not match the expected schema."""
