from typing import Optional


class PolyaxialError(Exception):
    """Base error; exit_code is the process status the CLI returns for it."""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: Optional[int] = None):
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


# ===========================
# Input / configuration errors (exit 2)
# ===========================

class DomainError(PolyaxialError, ValueError):
    exit_code = 2


class DimensionMismatchError(PolyaxialError, ValueError):
    exit_code = 2


class AlphaMismatchError(DimensionMismatchError):
    pass


class GridMismatchError(DimensionMismatchError):
    pass


class NotIntegrableError(PolyaxialError, ValueError):
    exit_code = 2


class NonPositivePolynomialError(PolyaxialError, ValueError):
    exit_code = 2


class NonRepresentableError(PolyaxialError):
    exit_code = 2


class ConfigError(PolyaxialError):
    exit_code = 2


# ===========================
# Accuracy errors (exit 1)
# ===========================

class EndpointSingularError(PolyaxialError, ValueError):
    exit_code = 1


class TruncationError(PolyaxialError):
    exit_code = 1


class ToleranceFailure(PolyaxialError):
    exit_code = 1


# ===========================
# Numerical errors (exit 3)
# ===========================

class NumericalOverflowError(PolyaxialError, ArithmeticError):
    exit_code = 3
