"""Exception types shared across the package."""


class QuantaleError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(QuantaleError):
    """Malformed input tables: wrong dimensions, unknown labels, bad indices."""


class QuantaleAxiomError(QuantaleError):
    """A quantale axiom failed during validation; carries the full report."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f"{first.axiom} at {first.witness}" if first else "unknown violation"
        super().__init__(f"not a commutative integral quantale: {detail}")


class SizeBudgetError(QuantaleError):
    """A construction or enumeration exceeded its configured size cap."""


class UnsupportedOperationError(QuantaleError):
    """Operation meaningful in general but not available for these arguments."""


class BridgeError(QuantaleError):
    """Source structure violates its own axioms; reported in source vocabulary."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DomainError(QuantaleError):
    """A morphism was applied to an element outside its domain."""


class ParseError(QuantaleError):
    """Unreadable, ambiguous or incomplete input file."""


class DDFError(QuantaleError):
    """Invalid step-function data for a distance distribution function."""
