"""Generalized translation T_y, its kernel w_α, and the Bessel convolution ∗_α.

The θ-integral is the working path. The explicit kernel is only used to
validate it and to check the kernel's own properties.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
from scipy.special import gammaln, roots_jacobi

from polyaxial.config import app_conf
from polyaxial.exceptions import (
    DimensionMismatchError,
    DomainError,
    EndpointSingularError,
    NotIntegrableError,
)
from polyaxial.fourier_bessel import dirac_spectrum, forward, inverse, kernel_matrices
from polyaxial.function_specs import FunctionSpec, exact_transform, is_integrable
from polyaxial.quadrature import (
    AlphaParams,
    QuadGrid,
    SampledFunction,
    as_alpha,
    check_truncation,
    lp_norm,
    pairwise_sum,
    sample,
)
from polyaxial.special_functions import bessel_kernel, normalized_bessel

logger = logging.getLogger(__name__)

CHUNK_EVALS = 1 << 20

Evaluable = Union[FunctionSpec, Callable[[np.ndarray], np.ndarray]]


def _evaluator(f: Evaluable) -> Callable[[np.ndarray], np.ndarray]:
    return f.evaluate if hasattr(f, "evaluate") else f


def _point(v, n: int, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(v, dtype=float))
    if arr.shape != (n,):
        raise DimensionMismatchError(f"{name} has {arr.size} coordinates, alpha has {n}")
    if np.any(arr < 0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must lie in the closed positive orthant")
    return arr


# ===========================
# θ-rule
# ===========================

@dataclass(frozen=True, eq=False)
class ThetaRule:
    """Gauss–Jacobi(α_i−1/2, α_i−1/2) in t = cos θ, one rule per axis."""

    alpha: AlphaParams
    nodes: Tuple[np.ndarray, ...]
    raw_weights: Tuple[np.ndarray, ...]
    weights: Tuple[np.ndarray, ...]

    @property
    def M(self) -> Tuple[int, ...]:
        return tuple(len(t) for t in self.nodes)


def theta_rule(alpha, M: int = None) -> ThetaRule:
    alpha = as_alpha(alpha)
    M = app_conf.THETA_NODES if M is None else int(M)
    if M < 1:
        raise DomainError(f"θ-rule needs at least one node, got {M}")
    nodes, raw, normalized = [], [], []
    for a, cp in zip(alpha.alpha, alpha.axis_c_prime):
        t, w = roots_jacobi(M, a - 0.5, a - 0.5)
        nodes.append(t)
        raw.append(w)
        normalized.append(cp * w)
    return ThetaRule(alpha=alpha, nodes=tuple(nodes), raw_weights=tuple(raw), weights=tuple(normalized))


def jacobi_mass(a: float) -> float:
    """∫_{−1}^{1} (1−t²)^{a−1/2} dt = √π Γ(a+1/2)/Γ(a+1)."""
    return float(np.exp(0.5 * np.log(np.pi) + gammaln(a + 0.5) - gammaln(a + 1.0)))


# ===========================
# Tensor quadrature over per-point node sets
# ===========================

def _tensor_sum(evaluator, axis_nodes: List[np.ndarray], axis_weights: List[np.ndarray]) -> np.ndarray:
    """Σ over the tensor of per-axis nodes; axis_nodes[i] has shape (B, M_i)."""
    n = len(axis_nodes)
    B = axis_nodes[0].shape[0]
    shaped = []
    for i, X in enumerate(axis_nodes):
        shape = [B] + [1] * n
        shape[i + 1] = X.shape[1]
        shaped.append(X.reshape(shape))
    grids = np.broadcast_arrays(*shaped)
    pts = np.stack(grids, axis=-1).reshape(-1, n)
    vals = np.asarray(evaluator(pts), dtype=float).reshape(grids[0].shape)
    if not np.all(np.isfinite(vals)):
        raise DomainError("translated function is not finite on ∏[|x_i−y_i|, x_i+y_i]")
    for w in reversed(axis_weights):
        vals = vals @ w
    return vals


def translate(f: Evaluable, y, x, rule: ThetaRule):
    """T_y f(x) by the θ-integral; x is one point (n,) or many (K, n)."""
    alpha = rule.alpha
    evaluator = _evaluator(f)
    y = _point(y, alpha.n, "y")
    xs = np.asarray(x, dtype=float)
    single = xs.ndim == 1
    xs = np.atleast_2d(xs)
    if xs.shape[1] != alpha.n:
        raise DimensionMismatchError(f"x has {xs.shape[1]} coordinates, alpha has {alpha.n}")
    if np.any(xs < 0):
        raise DomainError("x must lie in the closed positive orthant")

    per_point = int(np.prod([1 if y[i] == 0 else len(t) for i, t in enumerate(rule.nodes)]))
    chunk = max(1, CHUNK_EVALS // per_point)
    out = np.empty(len(xs))
    for start in range(0, len(xs), chunk):
        block = xs[start:start + chunk]
        axis_nodes, axis_weights = [], []
        for i, (t, w) in enumerate(zip(rule.nodes, rule.weights)):
            xi = block[:, i][:, None]
            if y[i] == 0:
                axis_nodes.append(xi)
                axis_weights.append(np.ones(1))
                continue
            X = np.sqrt(np.maximum(0.0, xi * xi + y[i] * y[i] - 2.0 * xi * y[i] * t[None, :]))
            X = np.where(xi == 0, y[i], X)
            axis_nodes.append(X)
            axis_weights.append(w)
        out[start:start + chunk] = _tensor_sum(evaluator, axis_nodes, axis_weights)
    return float(out[0]) if single else out


# ===========================
# Explicit kernel
# ===========================

def translation_kernel(alpha, x, y, z) -> float:
    """w_α(x, y, z); zero outside ∏[|x_i−y_i|, x_i+y_i]."""
    alpha = as_alpha(alpha)
    x = _point(x, alpha.n, "x")
    y = _point(y, alpha.n, "y")
    z = _point(z, alpha.n, "z")
    if np.any(x == 0) or np.any(y == 0) or np.any(z == 0):
        raise DomainError("translation kernel needs strictly positive coordinates")
    value = 1.0
    for i, (a, cp) in enumerate(zip(alpha.alpha, alpha.axis_c_prime)):
        # sorted so every permutation of (x, y, z) does identical arithmetic
        s1, s2, s3 = sorted((x[i], y[i], z[i]))
        gap = s1 + s2 - s3
        if gap < 0:
            return 0.0
        heron = (s1 + s2 + s3) * (s2 + s3 - s1) * (s1 + s3 - s2) * gap
        if heron == 0:
            if a < 0.5:
                raise EndpointSingularError(
                    f"kernel evaluated on an interval endpoint on axis {i} with alpha {a} < 1/2"
                )
            power = 1.0 if a == 0.5 else 0.0
        else:
            power = heron ** (a - 0.5)
        value *= cp * 2.0 ** (1.0 - 2.0 * a) * power / (s1 * s2 * s3) ** (2.0 * a)
    return value


def _kernel_axis_rule(a: float, cp: float, x: float, y: float, M: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes z and weights W with Σ W g(z) ≈ ∫ w_α(x, y, z) g(z) z^{2a+1} dz on one axis."""
    if x == 0 or y == 0:
        return np.array([x + y]), np.ones(1)
    lo, hi = abs(x - y), x + y
    h = 0.5 * (hi - lo)
    C = cp * 2.0 ** (1.0 - 2.0 * a) * (x * y) ** (-2.0 * a)
    if lo > 0:
        u, wu = roots_jacobi(M, a - 0.5, a - 0.5)
        z = lo + h * (1.0 + u)
        smooth = z * ((z + lo) * (hi + z)) ** (a - 0.5)
        return z, C * h ** (2.0 * a) * wu * smooth
    # x = y: the left endpoint exponent becomes 2a
    u, wu = roots_jacobi(M, a - 0.5, 2.0 * a)
    z = h * (1.0 + u)
    smooth = (hi + z) ** (a - 0.5)
    return z, C * h ** (3.0 * a + 0.5) * wu * smooth


def kernel_mass_defect(alpha, x, y, M: int = None) -> float:
    """|∫ w_α(x, y, z) dμ_α(z) − 1|."""
    alpha = as_alpha(alpha)
    M = app_conf.THETA_NODES if M is None else int(M)
    x = _point(x, alpha.n, "x")
    y = _point(y, alpha.n, "y")
    mass = 1.0
    for i, (a, cp) in enumerate(zip(alpha.alpha, alpha.axis_c_prime)):
        _, weights = _kernel_axis_rule(a, cp, x[i], y[i], M)
        mass *= float(np.sum(weights))
    return abs(mass - 1.0)


def translate_kernel_form(f: Evaluable, y, x, alpha, M: int = None) -> float:
    """T_y f(x) = ∫ w_α(x, y, z) f(z) dμ_α(z)."""
    alpha = as_alpha(alpha)
    M = app_conf.THETA_NODES if M is None else int(M)
    x = _point(x, alpha.n, "x")
    y = _point(y, alpha.n, "y")
    axis_nodes, axis_weights = [], []
    for i, (a, cp) in enumerate(zip(alpha.alpha, alpha.axis_c_prime)):
        z, w = _kernel_axis_rule(a, cp, x[i], y[i], M)
        axis_nodes.append(z[None, :])
        axis_weights.append(w)
    return float(_tensor_sum(_evaluator(f), axis_nodes, axis_weights)[0])


# ===========================
# Convolution
# ===========================

def convolve(f, g: Evaluable, out_grid: QuadGrid, rule: ThetaRule) -> SampledFunction:
    """(f ∗_α g)(x) = ∫ f(y) T_x g(y) dμ_α(y) at every node of out_grid."""
    fs = f if isinstance(f, SampledFunction) else sample(f, out_grid)
    fs.alpha.require_same(out_grid.alpha)
    fs.alpha.require_same(rule.alpha)
    if out_grid.n > 2:
        raise DomainError("direct convolution is limited to n ≤ 2; use convolve_spectral")
    check_truncation(fs, label="convolution input")

    weighted = fs.values * fs.grid.measure_weights
    active = weighted != 0
    ys = fs.grid.points[active]
    wf = weighted[active]
    out = np.zeros(out_grid.size)
    if wf.size:
        for k, x in enumerate(out_grid.points):
            out[k] = pairwise_sum(wf * translate(g, x, ys, rule))
    logger.debug(f"Convolved on {out_grid.size} output nodes from {wf.size} input nodes")
    return SampledFunction(out_grid, out)


def convolve_spectral(f: SampledFunction, g: SampledFunction, freq: QuadGrid) -> SampledFunction:
    """inverse(F f · F g); the route for n = 3."""
    f.grid.require_same(g.grid)
    km = kernel_matrices(f.grid, freq)
    Ff = forward(f, freq, km)
    Fg = forward(g, freq, km)
    return inverse(Ff.with_values(Ff.values * Fg.values), f.grid, km)


def gaussian_convolution_closed_form(points, alpha) -> np.ndarray:
    """e^{−‖·‖²/2} ∗_α e^{−‖·‖²/2} = 2^{−(|α|+n)} c_α^{−1} e^{−‖x‖²/4}."""
    alpha = as_alpha(alpha)
    r2 = np.sum(np.atleast_2d(points) ** 2, axis=1)
    return 2.0 ** (-(alpha.abs_alpha + alpha.n)) / alpha.c_alpha * np.exp(-0.25 * r2)


def _relative_l2(diff, ref) -> float:
    num = lp_norm(diff, 2)
    den = lp_norm(ref, 2)
    if den == 0:
        return num
    return num / den


def convolution_theorem_defect(f: Evaluable, g: Evaluable, phys: QuadGrid, freq: QuadGrid, rule: ThetaRule) -> float:
    """Relative L² gap between F(f ∗ g) and F(f)·F(g)."""
    km = kernel_matrices(phys, freq)
    fs = sample(f, phys)
    gs = sample(g, phys)
    lhs = forward(convolve(fs, g, phys, rule), freq, km)
    rhs = forward(fs, freq, km).values * forward(gs, freq, km).values
    return _relative_l2(lhs.with_values(lhs.values - rhs), lhs.with_values(rhs))


def product_transform_defect(f: FunctionSpec, g: FunctionSpec, phys: QuadGrid, freq: QuadGrid, rule: ThetaRule) -> float:
    """Relative L² gap between F(fg) and c_α² F(f) ∗ F(g), convolved on the frequency grid."""
    for spec in (f, g):
        if not is_integrable(spec):
            raise NotIntegrableError(f"{spec.label()} is not integrable against dμ_α")
    alpha = phys.alpha
    Fg = exact_transform(g, alpha)
    if Fg is None:
        raise DomainError(f"{g.label()} has no closed-form transform to translate")
    km = kernel_matrices(phys, freq)
    lhs = forward(sample(lambda pts: f.evaluate(pts) * g.evaluate(pts), phys), freq, km)
    Ff = forward(sample(f, phys), freq, km)
    conv = convolve(SampledFunction(freq, Ff.values), Fg, freq, rule)
    rhs = alpha.c_alpha ** 2 * conv.values
    return _relative_l2(lhs.with_values(lhs.values - rhs), lhs.with_values(rhs))


def contraction_defect(f: Evaluable, x, grid: QuadGrid, p: float, rule: ThetaRule) -> float:
    """max(0, ‖T_x f‖_p − ‖f‖_p)."""
    fs = sample(f, grid)
    shifted = fs.with_values(translate(f, x, grid.points, rule))
    return max(0.0, lp_norm(shifted, p) - lp_norm(fs, p))


def young_defect(f: Evaluable, g: Evaluable, grid: QuadGrid, p: float, rule: ThetaRule) -> float:
    """max(0, ‖f ∗ g‖_p − ‖f‖_p ‖g‖_1)."""
    fs = sample(f, grid)
    h = convolve(fs, g, grid, rule)
    return max(0.0, lp_norm(h, p) - lp_norm(fs, p) * lp_norm(sample(g, grid), 1))


def commutativity_defect(f: Evaluable, g: Evaluable, grid: QuadGrid, rule: ThetaRule) -> float:
    """‖f ∗ g − g ∗ f‖₂."""
    fg = convolve(sample(f, grid), g, grid, rule)
    gf = convolve(sample(g, grid), f, grid, rule)
    return lp_norm(fg.with_values(fg.values - gf.values), 2)


def modulation_defect(f: Evaluable, x, phys: QuadGrid, freq: QuadGrid, rule: ThetaRule) -> float:
    """‖F(T_x f) − ∏ j_{α_i}(x_i ·) F(f)‖₂ / ‖F(f)‖₂."""
    km = kernel_matrices(phys, freq)
    shifted = SampledFunction(phys, translate(f, x, phys.points, rule))
    lhs = forward(shifted, freq, km)
    Ff = forward(sample(f, phys), freq, km)
    rhs = dirac_spectrum(x, freq).values * Ff.values
    return _relative_l2(lhs.with_values(lhs.values - rhs), Ff)


def product_formula_defect(alpha, tau: Sequence[float], x, y, rule: ThetaRule) -> float:
    """|T_y j_α(τ·)(x) − j_α(τx) j_α(τy)|."""
    alpha = as_alpha(alpha)
    tau = np.atleast_1d(np.asarray(tau, dtype=float))

    def kernel(pts):
        out = np.ones(len(pts))
        for i, a in enumerate(alpha.alpha):
            out = out * normalized_bessel(a, tau[i] * pts[:, i])
        return out

    lhs = translate(kernel, y, x, rule)
    return abs(lhs - bessel_kernel(alpha, tau, x) * bessel_kernel(alpha, tau, y))
