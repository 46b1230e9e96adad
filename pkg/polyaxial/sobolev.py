"""E^{s,p}_α and H^s_α norms on spectral representations of distributions.

Weights follow (1+‖ξ‖²)^s with exponent s, not s/2, so H^s here is the
classical H^{2s}.
"""
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Callable, List, Optional, Sequence, Tuple, Union

import numpy as np

from polyaxial.config import app_conf
from polyaxial.exceptions import (
    DomainError,
    NonRepresentableError,
    NumericalOverflowError,
)
from polyaxial.fourier_bessel import (
    SpectralSamples,
    dirac_spectrum,
    forward,
    inverse,
    kernel_matrices,
)
from polyaxial.function_specs import (
    FunctionSpec,
    exact_transform,
    gaussian_mixture,
    scaled,
    support_radius,
)
from polyaxial.quadrature import (
    AlphaParams,
    QuadGrid,
    SampledFunction,
    as_alpha,
    build_grid,
    check_truncation,
    integrate,
    lp_norm,
    sample,
)

logger = logging.getLogger(__name__)

REPRESENTABLE_TOL = 1e-4


@dataclass(frozen=True)
class SobolevIndex:
    s: float
    p: float = 2.0

    def __post_init__(self):
        if not np.isfinite(self.s):
            raise DomainError(f"Sobolev order must be finite, got {self.s}")
        if not (1 <= self.p < np.inf):
            raise DomainError(f"p must lie in [1, ∞), got {self.p}")


Resampler = Callable[[QuadGrid], SpectralSamples]


@dataclass(frozen=True, eq=False)
class SpectralDistribution:
    """T ∈ S′_e held through F_α(T) on a frequency grid.

    resample, when present, rebuilds the same distribution on another grid and
    backs every refinement-stability check.
    """

    spectral: SpectralSamples
    resample: Optional[Resampler] = field(default=None, repr=False)
    label: str = "T"

    @property
    def grid(self) -> QuadGrid:
        return self.spectral.grid

    @property
    def alpha(self) -> AlphaParams:
        return self.spectral.alpha

    @property
    def values(self) -> np.ndarray:
        return self.spectral.values

    def map_values(self, fn: Callable[[QuadGrid, np.ndarray], np.ndarray], label: str = None) -> "SpectralDistribution":
        """New distribution with F(T) ↦ fn(grid, F(T)), carried through resampling."""
        base = self.resample
        resample = None
        if base is not None:
            def resample(grid: QuadGrid) -> SpectralSamples:
                S = base(grid)
                return S.with_values(fn(grid, S.values))
        return SpectralDistribution(
            spectral=self.spectral.with_values(fn(self.grid, self.values)),
            resample=resample,
            label=label or self.label,
        )

    # ===========================
    # Constructors
    # ===========================

    @classmethod
    def from_spec(cls, spec: FunctionSpec, alpha, freq_grid: QuadGrid, phys_grid: QuadGrid = None) -> "SpectralDistribution":
        alpha = as_alpha(alpha)
        exact = exact_transform(spec, alpha)
        if exact is not None:
            return cls(
                spectral=SpectralSamples.from_function(exact, freq_grid),
                resample=lambda grid: SpectralSamples.from_function(exact, grid),
                label=spec.label(),
            )
        if phys_grid is None:
            radius = support_radius(spec) or app_conf.DEFAULT_RADIUS
            phys_grid = build_grid(alpha, radius, app_conf.DEFAULT_NODES)
        fine_phys = build_grid(alpha, phys_grid.radius, [2 * k for k in phys_grid.nodes_per_axis])
        return cls(
            spectral=forward(sample(spec, phys_grid), freq_grid),
            resample=lambda grid: forward(sample(spec, fine_phys), grid),
            label=spec.label(),
        )

    @classmethod
    def from_function(cls, f: SampledFunction, freq_grid: QuadGrid, label: str = "g") -> "SpectralDistribution":
        return cls(spectral=forward(f, freq_grid), label=label)

    @classmethod
    def dirac(cls, x, alpha, freq_grid: QuadGrid) -> "SpectralDistribution":
        as_alpha(alpha).require_same(freq_grid.alpha)
        point = tuple(np.atleast_1d(x).tolist())
        return cls(
            spectral=dirac_spectrum(point, freq_grid),
            resample=lambda grid: dirac_spectrum(point, grid),
            label=f"delta{point}",
        )


def _as_distribution(T, grid: QuadGrid) -> SpectralDistribution:
    if isinstance(T, SpectralDistribution):
        return T
    if isinstance(T, FunctionSpec):
        return SpectralDistribution.from_spec(T, grid.alpha, grid)
    raise DomainError(f"cannot read {type(T).__name__} as a distribution")


def _weight(t: np.ndarray, s: float) -> np.ndarray:
    """(1+t)^s, evaluated as exp(s·log1p(t)) so it is monotone in s."""
    with np.errstate(over="ignore"):
        w = np.exp(s * np.log1p(t))
    if not np.all(np.isfinite(w)):
        raise NumericalOverflowError(f"(1+‖ξ‖²)^{s} overflows on a frequency box of radius {max(np.sqrt(t))}")
    return w


# ===========================
# Norms
# ===========================

def sobolev_norm(T: SpectralDistribution, idx: SobolevIndex) -> float:
    """c_α ‖(1+‖ξ‖²)^s F_α(T)‖_{L^p_α}."""
    spec = T.spectral
    weighted = spec.with_values(_weight(spec.grid.norm_sq, idx.s) * spec.values)
    value = T.alpha.c_alpha * lp_norm(weighted, idx.p)
    if not np.isfinite(value):
        raise NumericalOverflowError(f"E^{{{idx.s},{idx.p}}} norm overflowed")
    return value


def isometry_defect(T: SpectralDistribution, idx: SobolevIndex) -> float:
    """|‖T‖_{E^{s,p}} − ‖c_α(1+‖ξ‖²)^s F(T)‖_{L^p}|, computed along a separate path."""
    image = T.spectral.with_values(
        T.alpha.c_alpha * np.power(1.0 + T.grid.norm_sq, idx.s) * T.values
    )
    return abs(sobolev_norm(T, idx) - lp_norm(image, idx.p))


def hs_inner_product(S: SpectralDistribution, T: SpectralDistribution, s: float) -> complex:
    """c_α² ∫ (1+‖ξ‖²)^{2s} F(S) conj(F(T)) dμ_α."""
    S.grid.require_same(T.grid)
    w = _weight(S.grid.norm_sq, s) ** 2
    value = S.alpha.c_alpha ** 2 * integrate(S.spectral.with_values(w * S.values * np.conj(T.values)))
    return complex(value)


def homogeneous_seminorm(T: SpectralDistribution, s: float) -> float:
    """c_α (∫ ‖ξ‖^{4s} |F(T)|² dμ_α)^{1/2}."""
    if s < 0:
        raise DomainError(f"homogeneous seminorm needs s ≥ 0, got {s}")
    t = T.grid.norm_sq
    weighted = T.spectral.with_values(np.power(t, s) * T.values)
    return T.alpha.c_alpha * lp_norm(weighted, 2)


def seminorm_band(Ts: Sequence[SpectralDistribution], s: float) -> Tuple[float, float]:
    """(min, max) of homogeneous/inhomogeneous ratios over a family."""
    ratios = []
    for T in Ts:
        full = sobolev_norm(T, SobolevIndex(s, 2.0))
        if full > 0:
            ratios.append(homogeneous_seminorm(T, s) / full)
    if not ratios:
        return 0.0, 0.0
    band = (min(ratios), max(ratios))
    logger.info(f"Seminorm band at s={s} over {len(ratios)} distributions: [{band[0]:.6f}, {band[1]:.6f}]")
    return band


# ===========================
# Membership
# ===========================

def dirac_membership(s: float, p: float, alpha, n: int = None) -> bool:
    """δ_x ∈ E^{s,p} iff 2sp + (2−p)(|α| + n/2) < −n."""
    if not (p >= 1):
        raise DomainError(f"p must be ≥ 1, got {p}")
    alpha = as_alpha(alpha)
    n = alpha.n if n is None else n
    return 2.0 * s * p + (2.0 - p) * (alpha.abs_alpha + n / 2.0) < -n


def refinement_stable(
    quantity: Callable[[SpectralSamples], float],
    T: SpectralDistribution,
    tol: float = None,
) -> Tuple[bool, float, float]:
    """Accept when doubling both N and R_ξ changes quantity by less than tol."""
    tol = app_conf.REFINEMENT_TOL if tol is None else tol
    try:
        coarse = quantity(T.spectral)
    except NumericalOverflowError:
        return False, np.inf, np.inf
    if T.resample is None:
        return bool(np.isfinite(coarse)), coarse, coarse
    try:
        fine = quantity(T.resample(T.grid.refined()))
    except NumericalOverflowError:
        return False, coarse, np.inf
    if not (np.isfinite(coarse) and np.isfinite(fine)):
        return False, coarse, fine
    scale = max(abs(coarse), abs(fine))
    stable = scale == 0 or abs(fine - coarse) <= tol * scale
    if not stable:
        logger.debug(f"Refinement changed {T.label} from {coarse:.6e} to {fine:.6e}")
    return stable, coarse, fine


def dirac_membership_numeric(s: float, p: float, x, alpha, freq_grid: QuadGrid, tol: float = None) -> bool:
    """Refinement-stable finiteness of ∫(1+‖ξ‖²)^{sp} |∏ j_{α_i}(x_i ξ_i)|^p dμ_α."""
    T = SpectralDistribution.dirac(x, alpha, freq_grid)
    idx = SobolevIndex(s, p)

    def integral(S: SpectralSamples) -> float:
        return sobolev_norm(SpectralDistribution(S), idx) ** p

    stable, coarse, fine = refinement_stable(integral, T, tol)
    logger.info(f"Dirac E^{{{s},{p}}} integral: {coarse:.6e} -> {fine:.6e} (stable={stable})")
    return stable


def continuity_embedding_check(T: SpectralDistribution, s: float, m: int, tol: float = None) -> bool:
    """s > (|α|+n)/2 + m and ∫‖ξ‖^{2k}|F(T)| dμ_α finite and stable for k ≤ m."""
    if s <= embedding_threshold(T.alpha, m):
        return False
    for k in range(m + 1):
        def moment(S: SpectralSamples, k=k) -> float:
            return S.alpha.c_alpha * lp_norm(S.with_values(np.power(S.grid.norm_sq, k) * S.values), 1)

        stable, _, _ = refinement_stable(moment, T, tol)
        if not stable:
            return False
    return True


def embedding_threshold(alpha, m: int) -> float:
    alpha = as_alpha(alpha)
    return 0.5 * (alpha.abs_alpha + alpha.n) + m


# ===========================
# Operators
# ===========================

def laplacian_power(T: SpectralDistribution, k: int) -> SpectralDistribution:
    """(−Δ_α)^k T, i.e. the multiplier ‖ξ‖^{2k}."""
    if int(k) != k or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k}")
    k = int(k)
    return T.map_values(lambda grid, v: np.power(grid.norm_sq, k) * v, label=f"(-Δ)^{k} {T.label}")


def binomial_defect(T: SpectralDistribution, m: int) -> float:
    """max |Σ_j C(m,j) ‖ξ‖^{2j} F(T) − (1+‖ξ‖²)^m F(T)| / max |F(T)(1+‖ξ‖²)^m|."""
    total = sum(comb(m, j) * laplacian_power(T, j).values for j in range(m + 1))
    direct = np.power(1.0 + T.grid.norm_sq, m) * T.values
    scale = np.abs(direct).max()
    return 0.0 if scale == 0 else float(np.abs(total - direct).max() / scale)


def negative_order_representation(g: SampledFunction, m: int, freq_grid: QuadGrid) -> SpectralDistribution:
    """T = (1−Δ_α)^m g, spectrally F(T) = (1+‖ξ‖²)^m F(g)."""
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m}")
    G = SpectralDistribution.from_function(g, freq_grid)
    return G.map_values(lambda grid, v: np.power(1.0 + grid.norm_sq, int(m)) * v, label=f"(1-Δ)^{m} g")


def negative_order_binomial(g: SampledFunction, m: int, freq_grid: QuadGrid) -> SpectralDistribution:
    """Σ_k C(m,k)(−Δ_α)^k g, the same T built term by term."""
    G = SpectralDistribution.from_function(g, freq_grid)
    values = sum(comb(int(m), k) * laplacian_power(G, k).values for k in range(int(m) + 1))
    return SpectralDistribution(G.spectral.with_values(values), label=f"binomial (1-Δ)^{m} g")


def schwartz_multiply_bound(phi: FunctionSpec, T: SpectralDistribution, idx: SobolevIndex, phys_grid: QuadGrid) -> Tuple[float, float]:
    """(‖φT‖_{E^{s,p}}, 2^{|s|} c_α ‖T‖_{E^{s,p}} ‖(1+‖ξ‖²)^{|s|} F(φ)‖_{L¹})."""
    freq = T.grid
    km = kernel_matrices(phys_grid, freq)
    T_phys = inverse(T.spectral, phys_grid, km)
    roundtrip = forward(T_phys, freq, km)
    scale = lp_norm(T.spectral, 2)
    gap = lp_norm(roundtrip.with_values(roundtrip.values - T.values), 2)
    if scale > 0 and gap > REPRESENTABLE_TOL * scale:
        raise NonRepresentableError(
            f"{T.label} does not round-trip through the physical grid (relative gap {gap / scale:.2e})"
        )
    product = T_phys.with_values(phi.evaluate(phys_grid.points) * T_phys.values)
    lhs = sobolev_norm(SpectralDistribution(forward(product, freq, km)), idx)

    Fphi = _as_distribution(phi, freq)
    s_abs = abs(idx.s)
    phi_factor = lp_norm(Fphi.spectral.with_values(_weight(freq.norm_sq, s_abs) * Fphi.values), 1)
    rhs = 2.0 ** s_abs * T.alpha.c_alpha * sobolev_norm(T, idx) * phi_factor
    return lhs, rhs


def duality_pairing(T: SpectralDistribution, phi: Union[FunctionSpec, SpectralDistribution], s: float) -> Tuple[float, float]:
    """(c_α² ∫ F(T) F(φ) dμ_α, ‖φ‖_{H^s} ‖T‖_{H^{−s}})."""
    Phi = _as_distribution(phi, T.grid)
    T.grid.require_same(Phi.grid)
    pairing = T.alpha.c_alpha ** 2 * integrate(T.spectral.with_values(T.values * Phi.values))
    bound = sobolev_norm(Phi, SobolevIndex(s, 2.0)) * sobolev_norm(T, SobolevIndex(-s, 2.0))
    return float(np.real(pairing)), bound


def extremal_dual(Phi: SpectralDistribution, s: float) -> SpectralDistribution:
    """T with F(T) = (1+‖ξ‖²)^{2s} conj(F(φ)), which attains the duality bound."""
    return Phi.map_values(lambda grid, v: _weight(grid.norm_sq, 2.0 * s) * np.conj(v), label=f"extremal({Phi.label})")


def random_gaussian_mixture_spectra(alpha, freq_grid: QuadGrid, count: int, seed: int) -> List[SpectralDistribution]:
    """Seeded Gaussian mixtures with one to three components."""
    alpha = as_alpha(alpha)
    rng = np.random.default_rng(seed)
    family = []
    for _ in range(count):
        k = int(rng.integers(1, 4))
        spec = gaussian_mixture(rng.uniform(-1.0, 1.0, k), rng.uniform(0.5, 3.0, k))
        family.append(SpectralDistribution.from_spec(spec, alpha, freq_grid))
    return family


# ===========================
# Regularity and scaling
# ===========================

def polynomial_regularity_check(g, P, s: float, freq_grid: QuadGrid = None, tol: float = None) -> bool:
    """g ∈ E^{s+m,2} when u = P(−Δ_α)g ∈ E^{s,2}, with m the degree of P in ‖ξ‖²."""
    G = g if isinstance(g, SpectralDistribution) else SpectralDistribution.from_function(g, freq_grid)
    U = G.map_values(lambda grid, v: P.evaluate(grid.norm_sq) * v, label=f"P(-Δ){G.label}")
    try:
        u_norm = sobolev_norm(U, SobolevIndex(s, 2.0))
    except NumericalOverflowError:
        return False
    if not np.isfinite(u_norm):
        return False
    idx = SobolevIndex(s + P.degree, 2.0)
    stable, coarse, fine = refinement_stable(
        lambda S: sobolev_norm(SpectralDistribution(S), idx), G, tol
    )
    logger.info(f"‖g‖_E^{{{idx.s},2}} = {coarse:.6e} (refined {fine:.6e}), ‖u‖_E^{{{s},2}} = {u_norm:.6e}")
    return stable


def poincare_slope(
    spec: FunctionSpec,
    s: float,
    t: float,
    eps_list: Sequence[float],
    alpha,
    nodes: int = 128,
    freq_nodes: int = 256,
) -> float:
    """Least-squares slope of log(‖T_ε‖_{H^t}/‖T_ε‖_{H^s}) against log ε.

    T_ε(x) = T(x/ε) is supported in ∏(0, rε); the frequency box is widened to
    14/ε_min so the narrowest profile is still resolved.
    """
    alpha = as_alpha(alpha)
    if not (0 <= t <= s):
        raise DomainError(f"need 0 ≤ t ≤ s, got s={s}, t={t}")
    eps = [float(e) for e in eps_list]
    if len(eps) < 2 or any(not (0 < e <= 1) for e in eps):
        raise DomainError(f"eps_list needs at least two values in (0, 1], got {eps_list}")
    radius = support_radius(spec)
    if radius is None:
        raise DomainError(f"{spec.label()} has no compact support")
    if s == t:
        return 0.0

    freq = build_grid(alpha, 14.0 / min(eps), freq_nodes)
    logs, ratios = [], []
    for e in eps:
        profile = scaled(spec, e)
        phys = build_grid(alpha, radius * e, nodes)
        f = sample(profile, phys)
        check_truncation(f, escalate=True, label=f"scaled profile eps={e}")
        F = forward(f, freq)
        check_truncation(F, label=f"spectrum eps={e}")
        T = SpectralDistribution(F, label=profile.label())
        ratio = sobolev_norm(T, SobolevIndex(t, 2.0)) / sobolev_norm(T, SobolevIndex(s, 2.0))
        logs.append(np.log(e))
        ratios.append(np.log(ratio))
        logger.debug(f"Poincaré eps={e}: H^{t}/H^{s} ratio {ratio:.6e}")
    slope = float(np.polyfit(logs, ratios, 1)[0])
    logger.info(f"Poincaré slope for (s={s}, t={t}) over eps={eps}: {slope:.4f} (expected {2 * (s - t)})")
    return slope
