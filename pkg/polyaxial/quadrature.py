"""Tensor Gauss–Legendre grids on truncated boxes of the positive orthant.

The measure dμ_α(x) = ∏ x_i^{2α_i+1} dx_i is multiplied into the weights, so
integrating a sampled function is a single weighted sum. Values are stored
flattened row-major with axis 0 slowest.
"""
import logging
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Any, Callable, Dict, Sequence, Tuple, Union

import numpy as np
from scipy.special import gammaln, roots_legendre

from polyaxial.config import app_conf
from polyaxial.exceptions import (
    AlphaMismatchError,
    DimensionMismatchError,
    DomainError,
    GridMismatchError,
    TruncationError,
)

logger = logging.getLogger(__name__)


# ===========================
# Alpha parameters
# ===========================

@dataclass(frozen=True)
class AlphaParams:
    alpha: Tuple[float, ...]

    def __post_init__(self):
        values = tuple(float(a) for a in np.atleast_1d(self.alpha))
        if not values:
            raise DimensionMismatchError("alpha needs at least one component")
        for i, a in enumerate(values):
            if not np.isfinite(a) or a <= -0.5:
                raise DomainError(f"alpha[{i}] ≤ −1/2")
        object.__setattr__(self, "alpha", values)

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def abs_alpha(self) -> float:
        return float(sum(self.alpha))

    @property
    def c_alpha(self) -> float:
        """2^{−|α|}/∏Γ(α_i+1)."""
        a = np.asarray(self.alpha)
        return float(np.exp(-a.sum() * np.log(2.0) - gammaln(a + 1.0).sum()))

    @property
    def c_prime_alpha(self) -> float:
        return float(np.prod(self.axis_c_prime))

    @property
    def axis_c_prime(self) -> np.ndarray:
        """Per-axis Γ(α_i+1)/(√π Γ(α_i+1/2))."""
        a = np.asarray(self.alpha)
        return np.exp(gammaln(a + 1.0) - 0.5 * np.log(np.pi) - gammaln(a + 0.5))

    def require_same(self, other: "AlphaParams") -> None:
        if self.alpha != other.alpha:
            raise AlphaMismatchError(f"alpha mismatch: {self.alpha} vs {other.alpha}")


def as_alpha(alpha: Union[AlphaParams, Sequence[float], float]) -> AlphaParams:
    return alpha if isinstance(alpha, AlphaParams) else AlphaParams(tuple(np.atleast_1d(alpha)))


# ===========================
# Grids
# ===========================

@dataclass(frozen=True, eq=False)
class AxisRule:
    nodes: np.ndarray
    base_weights: np.ndarray
    radius: float


@dataclass(frozen=True, eq=False)
class QuadGrid:
    alpha: AlphaParams
    radius: Tuple[float, ...]
    nodes_per_axis: Tuple[int, ...]
    axes: Tuple[AxisRule, ...]
    measure_weights: np.ndarray

    @property
    def n(self) -> int:
        return self.alpha.n

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.nodes_per_axis

    @property
    def size(self) -> int:
        return int(np.prod(self.nodes_per_axis))

    @cached_property
    def points(self) -> np.ndarray:
        """(K, n) array of tensor nodes, axis 0 slowest."""
        mesh = np.meshgrid(*[ax.nodes for ax in self.axes], indexing="ij")
        pts = np.stack([m.ravel() for m in mesh], axis=-1)
        pts.flags.writeable = False
        return pts

    @cached_property
    def norm_sq(self) -> np.ndarray:
        """‖x‖² at every node; the spectral variable t for frequency grids."""
        t = np.sum(self.points ** 2, axis=1)
        t.flags.writeable = False
        return t

    @cached_property
    def outer_mask(self) -> np.ndarray:
        """Nodes lying on the outermost layer of some axis."""
        idx = np.indices(self.shape).reshape(self.n, -1)
        last = np.asarray(self.shape)[:, None] - 1
        return np.any(idx == last, axis=0)

    def refined(self, factor: int = 2) -> "QuadGrid":
        """Same alpha with both R and N multiplied by factor."""
        return build_grid(
            self.alpha,
            [r * factor for r in self.radius],
            [k * factor for k in self.nodes_per_axis],
        )

    def same_as(self, other: "QuadGrid") -> bool:
        return self is other or (
            self.alpha == other.alpha
            and self.radius == other.radius
            and self.nodes_per_axis == other.nodes_per_axis
        )

    def require_same(self, other: "QuadGrid") -> None:
        if not self.same_as(other):
            raise GridMismatchError(
                f"grid mismatch: R={self.radius}, N={self.nodes_per_axis} vs "
                f"R={other.radius}, N={other.nodes_per_axis}"
            )


def _per_axis(value, n: int, name: str) -> Tuple[float, ...]:
    values = tuple(np.atleast_1d(value).tolist())
    if len(values) == 1 and n > 1:
        values = values * n
    if len(values) != n:
        raise DimensionMismatchError(f"{name} has {len(values)} components, alpha has {n}")
    return values


def build_grid(
    alpha: Union[AlphaParams, Sequence[float]],
    radius: Union[float, Sequence[float]],
    nodes_per_axis: Union[int, Sequence[int]],
) -> QuadGrid:
    """Gauss–Legendre nodes mapped to (0, R_i) with x^{2α_i+1} folded into the weights."""
    alpha = as_alpha(alpha)
    radii = tuple(float(r) for r in _per_axis(radius, alpha.n, "radius"))
    counts = tuple(int(k) for k in _per_axis(nodes_per_axis, alpha.n, "nodes_per_axis"))
    if any(not np.isfinite(r) or r <= 0 for r in radii):
        raise DomainError(f"radius components must be positive, got {radii}")
    if any(k < 2 for k in counts):
        raise DomainError(f"node counts must be at least 2, got {counts}")

    axes = []
    axis_weights = []
    for a, r, k in zip(alpha.alpha, radii, counts):
        t, w = roots_legendre(k)
        nodes = 0.5 * r * (t + 1.0)
        base = 0.5 * r * w
        for arr in (nodes, base):
            arr.flags.writeable = False
        axes.append(AxisRule(nodes=nodes, base_weights=base, radius=r))
        axis_weights.append(base * nodes ** (2.0 * a + 1.0))

    weights = reduce(np.multiply.outer, axis_weights).ravel()
    weights.flags.writeable = False
    logger.debug(f"Built grid alpha={alpha.alpha} R={radii} N={counts}")
    return QuadGrid(
        alpha=alpha,
        radius=radii,
        nodes_per_axis=counts,
        axes=tuple(axes),
        measure_weights=weights,
    )


def measure_moment(alpha: Union[AlphaParams, Sequence[float]], radius) -> float:
    """Exact ∫_box 1 dμ_α = ∏ R_i^{2α_i+2}/(2α_i+2)."""
    alpha = as_alpha(alpha)
    radii = _per_axis(radius, alpha.n, "radius")
    return float(np.prod([r ** (2 * a + 2) / (2 * a + 2) for a, r in zip(alpha.alpha, radii)]))


# ===========================
# Sampled functions
# ===========================

@dataclass(frozen=True, eq=False)
class SampledFunction:
    grid: QuadGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.dtype.kind not in "fc":
            values = values.astype(float)
        values = values.ravel()
        if values.size != self.grid.size:
            raise DimensionMismatchError(
                f"{values.size} values for a grid of {self.grid.size} nodes"
            )
        if not np.all(np.isfinite(values)):
            raise DomainError("sampled values must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def alpha(self) -> AlphaParams:
        return self.grid.alpha

    def with_values(self, values: np.ndarray) -> "SampledFunction":
        return SampledFunction(self.grid, values)

    def to_json(self) -> Dict[str, Any]:
        return snapshot(self.grid, self.values)


def sample(f: Union[Callable[[np.ndarray], np.ndarray], Any], grid: QuadGrid) -> SampledFunction:
    """Evaluate a FunctionSpec or a callable on (K, n) points at every grid node."""
    evaluator = f.evaluate if hasattr(f, "evaluate") else f
    values = np.asarray(evaluator(grid.points))
    if values.ndim == 0:
        values = np.full(grid.size, float(values))
    return SampledFunction(grid, values)


def pairwise_sum(values: np.ndarray):
    """Balanced-tree reduction; the result depends only on the input order."""
    v = np.asarray(values).ravel()
    if v.size == 0:
        return v.dtype.type(0)
    while v.size > 1:
        if v.size % 2:
            v = np.concatenate([v, np.zeros(1, dtype=v.dtype)])
        v = v[0::2] + v[1::2]
    return v[0]


def integrate(f) -> Union[float, complex]:
    """∫ f dμ_α as a pairwise weighted sum."""
    total = pairwise_sum(f.values * f.grid.measure_weights)
    return complex(total) if np.iscomplexobj(total) else float(total)


def lp_norm(f, p: float) -> float:
    """(∫|f|^p dμ_α)^{1/p}; p = inf is the discrete sup."""
    if not (p >= 1):
        raise DomainError(f"p must be ≥ 1, got {p}")
    mod = np.abs(f.values)
    if np.isinf(p):
        return float(mod.max()) if mod.size else 0.0
    return float(pairwise_sum(mod ** p * f.grid.measure_weights) ** (1.0 / p))


# ===========================
# Truncation
# ===========================

def truncation_ratio(f) -> float:
    mod = np.abs(f.values)
    peak = mod.max() if mod.size else 0.0
    if peak == 0:
        return 0.0
    return float(mod[f.grid.outer_mask].max() / peak)


def check_truncation(f, tol: float = None, escalate: bool = False, label: str = "function") -> float:
    """Warn (or raise TruncationError) when |f| at the outer nodes is not negligible."""
    tol = app_conf.TRUNCATION_TOL if tol is None else tol
    ratio = truncation_ratio(f)
    if ratio > tol:
        message = (
            f"{label} not negligible at the box edge: ratio {ratio:.3e} > {tol:.1e} "
            f"(R={f.grid.radius})"
        )
        if escalate:
            logger.error(message)
            raise TruncationError(message)
        logger.warning(message)
    return ratio


# ===========================
# Snapshots
# ===========================

def snapshot(grid: QuadGrid, values: np.ndarray) -> Dict[str, Any]:
    doc = {
        "alpha": list(grid.alpha.alpha),
        "radius": list(grid.radius),
        "nodes_per_axis": list(grid.nodes_per_axis),
    }
    if np.iscomplexobj(values):
        doc["values"] = [float(v) for v in np.real(values)]
        doc["imag"] = [float(v) for v in np.imag(values)]
    else:
        doc["values"] = [float(v) for v in values]
    return doc


def grid_from_snapshot(doc: Dict[str, Any]) -> Tuple[QuadGrid, np.ndarray]:
    try:
        grid = build_grid(doc["alpha"], doc["radius"], doc["nodes_per_axis"])
        values = np.asarray(doc["values"], dtype=float)
        if "imag" in doc:
            values = values + 1j * np.asarray(doc["imag"], dtype=float)
    except KeyError as e:
        raise DomainError(f"snapshot is missing field {str(e)}")
    return grid, values


def sampled_from_json(doc: Dict[str, Any]) -> SampledFunction:
    grid, values = grid_from_snapshot(doc)
    return SampledFunction(grid, values)
