"""
Exception hierarchy for the degree-8 permutation polynomial classifier.

Every error raised on purpose by the package derives from ``PP8Error`` so the
command line front end can tell user mistakes (exit code 2) from crashes.
"""

from typing import Optional


class PP8Error(Exception):
    """Base class of all package errors."""


class FieldRangeError(PP8Error, ValueError):
    """An integer argument lies outside its admissible range."""


class FieldDomainError(PP8Error, ZeroDivisionError):
    """An operation was asked for at a point where it is undefined (inverse of 0, ...)."""


class ContextMismatchError(PP8Error, ValueError):
    """Operands live over different fields."""


class ShapeError(PP8Error, ValueError):
    """A polynomial does not have the shape an operation requires."""


class ExponentOverflowError(PP8Error, OverflowError):
    """A monomial exponent no longer fits its 16-bit slot."""


class ModuliFileError(PP8Error):
    """The moduli constants file is malformed or lists a bad modulus."""


class CoefficientSyntaxError(PP8Error, ValueError):
    """Coefficient text is not one of ``0``, ``1``, ``e`` or ``e^k``."""


class ConstraintMismatchError(PP8Error):
    """A search-pruning constraint failed its symbolic re-derivation."""


class ProofStepFailed(PP8Error):
    """
    A proof-replay step did not hold.

    Attributes:
        step (str): Name of the failing step
        detail (str): Rendered failing identity or counter-evidence
        report (Optional[object]): Partial report collected up to the failure
    """

    def __init__(self, step: str, detail: str, report: Optional[object] = None) -> None:
        super().__init__(f"{step}: {detail}")
        self.step: str = step
        self.detail: str = detail
        self.report: Optional[object] = report
