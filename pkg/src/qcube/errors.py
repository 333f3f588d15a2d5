"""Exception types raised by the library."""

from __future__ import annotations


class QcubeError(ValueError):
    """Base class for domain errors (bad input or a failed precondition)."""


class NotRational(QcubeError):
    pass


class Singular(QcubeError):
    pass


class NotAnEigenvalue(QcubeError):
    pass


class NotEigenfunction(QcubeError):
    pass


class NotEquitable(QcubeError):
    """Two vertices of the same color see different neighbor-color counts."""

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


class NotDiagonalizableOverHypercubeSpectrum(QcubeError):
    pass
