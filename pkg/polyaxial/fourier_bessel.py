"""Fourier–Bessel transform F_α on tensor grids, applied one axis at a time."""
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np

from polyaxial.exceptions import DomainError, NumericalOverflowError
from polyaxial.quadrature import (
    AlphaParams,
    QuadGrid,
    SampledFunction,
    check_truncation,
    grid_from_snapshot,
    integrate,
    lp_norm,
    sample,
    snapshot,
)
from polyaxial.special_functions import laplacian_fd, normalized_bessel

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SpectralSamples:
    grid: QuadGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.dtype.kind not in "fc":
            values = values.astype(float)
        values = values.ravel()
        if values.size != self.grid.size:
            raise DomainError(f"{values.size} spectral values for a grid of {self.grid.size} nodes")
        if not np.all(np.isfinite(values)):
            raise NumericalOverflowError("spectral values are not finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def alpha(self) -> AlphaParams:
        return self.grid.alpha

    def with_values(self, values: np.ndarray) -> "SpectralSamples":
        return SpectralSamples(self.grid, values)

    @classmethod
    def from_function(cls, fn: Callable[[np.ndarray], np.ndarray], grid: QuadGrid) -> "SpectralSamples":
        """Sample a closed-form spectrum at the frequency nodes."""
        return cls(grid, np.asarray(fn(grid.points)))

    def to_json(self) -> Dict[str, Any]:
        doc = snapshot(self.grid, self.values)
        doc["domain"] = "frequency"
        return doc


def spectral_from_json(doc: Dict[str, Any]) -> SpectralSamples:
    if doc.get("domain") != "frequency":
        raise DomainError("snapshot is not tagged as a frequency-domain document")
    grid, values = grid_from_snapshot(doc)
    return SpectralSamples(grid, values)


# ===========================
# Kernel matrices
# ===========================

@dataclass(frozen=True, eq=False)
class KernelMatrices:
    """K_i[k, j] = j_{α_i}(λ_k x_j) for one (physical, frequency) grid pair."""

    phys: QuadGrid
    freq: QuadGrid
    matrices: Tuple[np.ndarray, ...]

    def matches(self, phys: QuadGrid, freq: QuadGrid) -> bool:
        return self.phys.same_as(phys) and self.freq.same_as(freq)


def kernel_matrices(phys: QuadGrid, freq: QuadGrid) -> KernelMatrices:
    phys.alpha.require_same(freq.alpha)
    mats = []
    for a, px, fx in zip(phys.alpha.alpha, phys.axes, freq.axes):
        K = normalized_bessel(a, np.outer(fx.nodes, px.nodes))
        K.flags.writeable = False
        mats.append(K)
    return KernelMatrices(phys=phys, freq=freq, matrices=tuple(mats))


def _apply_axes(values: np.ndarray, grid_in: QuadGrid, mats) -> np.ndarray:
    tensor = (values * grid_in.measure_weights).reshape(grid_in.shape)
    for axis, K in enumerate(mats):
        tensor = np.moveaxis(np.tensordot(K, tensor, axes=([1], [axis])), 0, axis)
    out = tensor.reshape(-1)
    if not np.all(np.isfinite(out)):
        raise NumericalOverflowError("non-finite value in the Fourier–Bessel sum")
    return out


def _kernels_for(phys: QuadGrid, freq: QuadGrid, kernels: Optional[KernelMatrices]) -> KernelMatrices:
    if kernels is not None and kernels.matches(phys, freq):
        return kernels
    return kernel_matrices(phys, freq)


# ===========================
# Transform pair
# ===========================

def forward(f: SampledFunction, freq_grid: QuadGrid, kernels: Optional[KernelMatrices] = None) -> SpectralSamples:
    """F(λ_k) = Σ_j w_j f(x_j) ∏ j_{α_i}(λ_{k,i} x_{j,i})."""
    f.grid.alpha.require_same(freq_grid.alpha)
    check_truncation(f, label="transform input")
    km = _kernels_for(f.grid, freq_grid, kernels)
    values = _apply_axes(f.values, f.grid, km.matrices)
    return SpectralSamples(freq_grid, values)


def inverse(F: SpectralSamples, phys_grid: QuadGrid, kernels: Optional[KernelMatrices] = None) -> SampledFunction:
    """c_α² F_α applied to F, landing on the physical grid."""
    F.grid.alpha.require_same(phys_grid.alpha)
    km = _kernels_for(phys_grid, F.grid, kernels)
    values = _apply_axes(F.values, F.grid, [K.T for K in km.matrices])
    return SampledFunction(phys_grid, phys_grid.alpha.c_alpha ** 2 * values)


def transform_spec(spec, phys: QuadGrid, freq: QuadGrid, kernels: Optional[KernelMatrices] = None) -> SpectralSamples:
    return forward(sample(spec, phys), freq, kernels)


# ===========================
# Identities
# ===========================

def plancherel_defect(f: SampledFunction, freq_grid: QuadGrid, kernels: Optional[KernelMatrices] = None) -> float:
    """| ‖f‖₂ − c_α‖F_α f‖₂ | / ‖f‖₂."""
    norm_f = lp_norm(f, 2)
    if norm_f == 0:
        raise DomainError("plancherel_defect is undefined for ‖f‖₂ = 0")
    F = forward(f, freq_grid, kernels)
    return abs(norm_f - f.alpha.c_alpha * lp_norm(F, 2)) / norm_f


def inversion_defect(f: SampledFunction, freq_grid: QuadGrid, kernels: Optional[KernelMatrices] = None) -> float:
    """‖inverse(forward(f)) − f‖₂ / ‖f‖₂."""
    norm_f = lp_norm(f, 2)
    if norm_f == 0:
        return 0.0
    km = _kernels_for(f.grid, freq_grid, kernels)
    back = inverse(forward(f, freq_grid, km), f.grid, km)
    return lp_norm(f.with_values(back.values - f.values), 2) / norm_f


def sup_bound_defect(f: SampledFunction, freq_grid: QuadGrid, kernels: Optional[KernelMatrices] = None) -> float:
    """max(0, ‖F_α f‖_∞ − ‖f‖_{L¹})."""
    F = forward(f, freq_grid, kernels)
    return max(0.0, lp_norm(F, np.inf) - lp_norm(f, 1))


def sup_bound_excess(f: SampledFunction, freq_grid: QuadGrid, kernels: Optional[KernelMatrices] = None) -> float:
    """sup_bound_defect in units of ‖f‖_{L¹}; zero for f ≡ 0."""
    mass = lp_norm(f, 1)
    return 0.0 if mass == 0 else sup_bound_defect(f, freq_grid, kernels) / mass


Multiplier = Union[float, Callable[[np.ndarray], np.ndarray]]


def apply_multiplier(F: SpectralSamples, m: Multiplier) -> SpectralSamples:
    """Pointwise m(ξ_k)·F(ξ_k); m takes the (K, n) frequency nodes."""
    if callable(m):
        mv = np.asarray(m(F.grid.points))
        if mv.ndim == 0:
            mv = np.full(F.grid.size, float(mv))
    else:
        mv = np.full(F.grid.size, float(m))
    if not np.all(np.isfinite(mv)):
        raise DomainError("multiplier is not finite on every frequency node")
    return F.with_values(mv * F.values)


def dual_pairing_defect(f: SampledFunction, g: SampledFunction) -> float:
    """|∫ f F_α g dμ − ∫ g F_α f dμ| relative to the larger side."""
    f.grid.require_same(g.grid)
    km = kernel_matrices(g.grid, f.grid)
    lhs = integrate(f.with_values(f.values * forward(g, f.grid, km).values))
    rhs = integrate(g.with_values(g.values * forward(f, g.grid, km).values))
    scale = max(abs(lhs), abs(rhs))
    return 0.0 if scale == 0 else abs(lhs - rhs) / scale


def dirac_spectrum(x, freq_grid: QuadGrid) -> SpectralSamples:
    """F_α(δ_x)(ξ) = ∏ j_{α_i}(x_i ξ_i)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    values = np.ones(freq_grid.size)
    for i, a in enumerate(freq_grid.alpha.alpha):
        values = values * normalized_bessel(a, x[i] * freq_grid.points[:, i])
    return SpectralSamples(freq_grid, values)


def eigenrelation_defect(spec, phys: QuadGrid, freq: QuadGrid, h: float = 1e-3) -> float:
    """‖F(Δ_α f) + ‖ξ‖² F(f)‖₂ / ‖F(f)‖₂ with Δ_α by finite differences."""
    km = kernel_matrices(phys, freq)
    Ff = forward(sample(spec, phys), freq, km)
    lap = laplacian_fd(spec.evaluate, phys.points, phys.alpha, h)
    Fl = forward(SampledFunction(phys, lap), freq, km)
    predicted = apply_multiplier(Ff, lambda pts: -np.sum(pts ** 2, axis=1))
    residual = Ff.with_values(Fl.values - predicted.values)
    return lp_norm(residual, 2) / lp_norm(Ff, 2)
