"""Normalized Bessel functions j_γ(x) = Γ(γ+1)(2/x)^γ J_γ(x), with j_γ(0) = 1."""
import logging
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from scipy.special import gammaln, jv

from polyaxial.exceptions import DimensionMismatchError, DomainError
from polyaxial.quadrature import AlphaParams

logger = logging.getLogger(__name__)

SERIES_CUTOFF = 6.0
SERIES_RTOL = 1e-17
SERIES_MAX_TERMS = 500


@dataclass(frozen=True)
class BesselOrder:
    gamma: float

    def __post_init__(self):
        g = float(self.gamma)
        if not np.isfinite(g) or g < -0.5:
            raise DomainError(f"Bessel order must be ≥ −1/2, got {self.gamma}")
        object.__setattr__(self, "gamma", g)


def _order(gamma: Union[BesselOrder, float]) -> float:
    return gamma.gamma if isinstance(gamma, BesselOrder) else BesselOrder(gamma).gamma


def _series(g: float, x: np.ndarray) -> np.ndarray:
    q = -0.25 * x * x
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(SERIES_MAX_TERMS):
        term = term * q / ((k + 1.0) * (k + g + 1.0))
        total = total + term
        if np.all(np.abs(term) <= SERIES_RTOL * np.abs(total)):
            break
    return total


def _rescaled_jv(g: float, x: np.ndarray) -> np.ndarray:
    # jv switches to the Hankel asymptotic expansion for large arguments
    return np.exp(gammaln(g + 1.0) + g * np.log(2.0 / x)) * jv(g, x)


def normalized_bessel(gamma: Union[BesselOrder, float], x):
    """j_γ(x) for x ≥ 0; scalar in, float out, array in, array out."""
    g = _order(gamma)
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(arr)):
        raise DomainError("Bessel argument must be finite")
    if np.any(arr < 0):
        raise DomainError(f"Bessel argument must be ≥ 0, got min {arr.min()}")

    flat = arr.ravel()
    out = np.empty_like(flat)
    small = flat <= SERIES_CUTOFF
    if np.any(small):
        out[small] = _series(g, flat[small])
    if np.any(~small):
        out[~small] = _rescaled_jv(g, flat[~small])

    if np.ndim(x) == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def bessel_kernel(alpha: Union[AlphaParams, Sequence[float]], lam, x) -> float:
    """∏ j_{α_i}(λ_i x_i), factors multiplied in index order."""
    orders = alpha.alpha if isinstance(alpha, AlphaParams) else tuple(np.atleast_1d(alpha))
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if not (len(orders) == lam.size == x.size):
        raise DimensionMismatchError(
            f"dimension mismatch: alpha {len(orders)}, lambda {lam.size}, x {x.size}"
        )
    value = 1.0
    for a, l, xi in zip(orders, lam, x):
        value *= normalized_bessel(a, l * xi)
    return value


def bessel_ode_residual(gamma: Union[BesselOrder, float], x: float, h: float) -> float:
    """|j″ + ((2γ+1)/x) j′ + j| by centered differences."""
    g = _order(gamma)
    if not (h > 0 and x > 2 * h):
        raise DomainError(f"need x > 2h > 0, got x={x}, h={h}")
    jm, j0, jp = normalized_bessel(g, np.array([x - h, x, x + h]))
    d2 = (jp - 2.0 * j0 + jm) / (h * h)
    d1 = (jp - jm) / (2.0 * h)
    return float(abs(d2 + (2.0 * g + 1.0) / x * d1 + j0))


def laplacian_fd(
    f: Callable[[np.ndarray], np.ndarray],
    points: np.ndarray,
    alpha: Union[AlphaParams, Sequence[float]],
    h: float = 1e-3,
) -> np.ndarray:
    """Δ_α f at (K, n) points by centered differences.

    f must be even in every variable; x_i − h is reflected to |x_i − h|, which
    keeps the stencil valid right up to the coordinate hyperplanes.
    """
    orders = alpha.alpha if isinstance(alpha, AlphaParams) else tuple(np.atleast_1d(alpha))
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[1] != len(orders):
        raise DimensionMismatchError(f"points have {pts.shape[1]} coordinates, alpha has {len(orders)}")
    if np.any(pts <= 0):
        raise DomainError("laplacian_fd needs points strictly inside the orthant")
    f0 = np.asarray(f(pts), dtype=float)
    total = np.zeros_like(f0)
    for i, a in enumerate(orders):
        plus = pts.copy()
        plus[:, i] += h
        minus = pts.copy()
        minus[:, i] = np.abs(minus[:, i] - h)
        fp = np.asarray(f(plus), dtype=float)
        fm = np.asarray(f(minus), dtype=float)
        total += (fp - 2.0 * f0 + fm) / (h * h) + (2.0 * a + 1.0) / pts[:, i] * (fp - fm) / (2.0 * h)
    return total
