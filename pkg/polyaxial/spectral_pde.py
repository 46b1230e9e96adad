"""P(−Δ_α)u = f by division in the Fourier–Bessel domain."""
import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator

from polyaxial.exceptions import DomainError, NonPositivePolynomialError
from polyaxial.quadrature import lp_norm
from polyaxial.schemas import RegularityReport
from polyaxial.sobolev import SobolevIndex, SpectralDistribution, sobolev_norm

logger = logging.getLogger(__name__)

DENSE_SAMPLES = 2000
ROOT_IMAG_TOL = 1e-8


class EvenPolynomial(BaseModel):
    """P(t) = Σ c_j t^j with t = ‖ξ‖²."""

    coeffs: List[float] = Field(..., min_length=1)

    class Config:
        frozen = True

    @field_validator("coeffs")
    @classmethod
    def finite_coeffs(cls, value):
        if not all(np.isfinite(c) for c in value):
            raise ValueError("polynomial coefficients must be finite")
        return value

    @property
    def degree(self) -> int:
        nonzero = [j for j, c in enumerate(self.coeffs) if c != 0]
        return nonzero[-1] if nonzero else 0

    @property
    def leading(self) -> float:
        return float(self.coeffs[self.degree])

    def evaluate(self, t):
        return np.polynomial.polynomial.polyval(t, self.coeffs)

    def is_positive_on(self, t_values) -> bool:
        """P > 0 at t = 0, at every t_value, and without a real root on [0, ∞)."""
        samples = np.concatenate([[0.0], np.asarray(t_values, dtype=float).ravel()])
        if not (self.leading > 0 and np.all(self.evaluate(samples) > 0)):
            return False
        if self.degree == 0:
            return True
        roots = np.polynomial.polynomial.polyroots(self.coeffs[: self.degree + 1])
        near_real = np.abs(roots.imag) <= ROOT_IMAG_TOL * np.maximum(1.0, np.abs(roots))
        return not np.any(roots.real[near_real] >= 0)

    def multiplier_sup(self, gain: float, t_values) -> float:
        """sup_{t≥0} (1+t)^gain / P(t): grid values, a dense sample and the t → ∞ limit."""
        t_values = np.asarray(t_values, dtype=float)
        top = max(float(t_values.max()) if t_values.size else 1.0, 1.0)
        dense = np.concatenate([[0.0], np.geomspace(1e-6, 1e6 * top, DENSE_SAMPLES)])
        samples = np.concatenate([t_values, dense])
        ratio = np.power(1.0 + samples, gain) / self.evaluate(samples)
        if self.degree > gain:
            limit = 0.0
        elif self.degree == gain:
            limit = 1.0 / self.leading
        else:
            limit = np.inf
        return float(max(ratio.max(), limit))


def helmholtz_polynomial(k: float) -> EvenPolynomial:
    if not np.isfinite(k) or k == 0:
        raise DomainError(f"k must be a nonzero real, got {k}")
    return EvenPolynomial(coeffs=[k * k, 1.0])


def solve_polynomial(f: SpectralDistribution, P: EvenPolynomial) -> SpectralDistribution:
    """F(u) = F(f) / P(‖ξ‖²)."""
    p_values = P.evaluate(f.grid.norm_sq)
    if not P.is_positive_on(f.grid.norm_sq):
        logger.error(f"Polynomial {P.coeffs} is not strictly positive on [0, ∞)")
        raise NonPositivePolynomialError(
            f"P with coefficients {P.coeffs} must be strictly positive on [0, ∞)"
        )
    logger.debug(f"Solving P(-Δ)u = f with P={P.coeffs} on {f.grid.size} nodes, min P {p_values.min():.3e}")
    return f.map_values(lambda grid, v: v / P.evaluate(grid.norm_sq), label=f"P^-1 {f.label}")


def solve_helmholtz(f: SpectralDistribution, k: float) -> SpectralDistribution:
    """(k² − Δ_α)u = f."""
    return solve_polynomial(f, helmholtz_polynomial(k))


def solve_roundtrip_defect(f: SpectralDistribution, u: SpectralDistribution, P: EvenPolynomial) -> float:
    """‖P·F(u) − F(f)‖₂ / ‖F(f)‖₂."""
    f.grid.require_same(u.grid)
    residual = P.evaluate(u.grid.norm_sq) * u.values - f.values
    scale = lp_norm(f.spectral, 2)
    gap = lp_norm(f.spectral.with_values(residual), 2)
    return gap if scale == 0 else gap / scale


def regularity_report(
    f: SpectralDistribution,
    u: SpectralDistribution,
    s: float,
    gain: float,
    P: Optional[EvenPolynomial] = None,
    tol: float = 1e-8,
) -> RegularityReport:
    """‖u‖_{H^{s+gain}} against sup_t (1+t)^gain/P(t) · ‖f‖_{H^s}."""
    P = P or EvenPolynomial(coeffs=[1.0])
    f_norm = sobolev_norm(f, SobolevIndex(s, 2.0))
    u_norm = sobolev_norm(u, SobolevIndex(s + gain, 2.0))
    ratio = 0.0 if f_norm == 0 else u_norm / f_norm
    bound = P.multiplier_sup(gain, f.grid.norm_sq)
    report = RegularityReport(
        f_norm=f_norm,
        u_norm=u_norm,
        ratio=ratio,
        bound=bound,
        s=s,
        gain=gain,
        passed=ratio <= bound + tol,
    )
    logger.info(f"Regularity s={s} gain={gain}: ratio {ratio:.6e} vs bound {bound:.6e}")
    return report
