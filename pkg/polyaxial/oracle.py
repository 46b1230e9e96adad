"""High-resolution reference path and the expectation table it writes.

Nothing here runs during a normal verify. Values come from grids with N, M
and R multiplied by four, compensated summation, and 50-digit Bessel series.
"""
import json
import logging
import math
import os
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional

import mpmath
import numpy as np

from polyaxial.config import app_conf
from polyaxial.function_specs import FunctionSpec, gaussian, poly_gaussian
from polyaxial.quadrature import AlphaParams, as_alpha, build_grid, sample
from polyaxial.special_functions import normalized_bessel
from polyaxial.translation import theta_rule

logger = logging.getLogger(__name__)

REFINEMENT = 4
ORACLE_DPS = 50
BESSEL_ORDERS = (-0.5, 0.0, 0.5, 1.0, 2.5)
BESSEL_POINTS = (0.5, 1.5, 3.0, 5.0, 8.0, 12.5, 17.0, 19.0)
TRANSFORM_POINTS = (0.0, 0.5, 1.0, 2.0, 3.0, 5.0)
TRANSLATE_PAIRS = ((1.0, 2.0), (0.7, 0.7), (3.0, 0.5))


def bessel_series_oracle(gamma: float, x: float, dps: int = ORACLE_DPS) -> float:
    """j_γ(x) = ₀F₁(; γ+1; −x²/4) summed at dps digits."""
    with mpmath.workdps(dps):
        value = mpmath.hyp0f1(mpmath.mpf(gamma) + 1, -mpmath.mpf(x) ** 2 / 4)
        return float(value)


def _kernel_at(alpha: AlphaParams, lam, points: np.ndarray) -> np.ndarray:
    out = np.ones(len(points))
    for i, a in enumerate(alpha.alpha):
        out = out * normalized_bessel(a, lam[i] * points[:, i])
    return out


def pointwise_transform(f, lam, compensated: bool = False) -> float:
    """F_α f(λ) at a single frequency by direct summation over the grid."""
    grid = f.grid
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    terms = f.values * grid.measure_weights * _kernel_at(grid.alpha, lam, grid.points)
    if compensated:
        return math.fsum(terms.tolist())
    return float(np.sum(terms))


def high_resolution_transform(spec: FunctionSpec, alpha, lam, radius, nodes) -> float:
    alpha = as_alpha(alpha)
    radii = np.atleast_1d(radius) * REFINEMENT
    counts = np.atleast_1d(nodes) * REFINEMENT
    grid = build_grid(alpha, radii.tolist(), counts.astype(int).tolist())
    return pointwise_transform(sample(spec, grid), lam, compensated=True)


def high_resolution_translate(spec: FunctionSpec, y, x, alpha, M: int) -> float:
    """T_y f(x) with a θ-rule REFINEMENT times finer and fsum over the tensor of nodes."""
    alpha = as_alpha(alpha)
    rule = theta_rule(alpha, M * REFINEMENT)
    x = np.atleast_1d(np.asarray(x, dtype=float))
    y = np.atleast_1d(np.asarray(y, dtype=float))
    axes_X, axes_w = [], []
    for i, (t, w) in enumerate(zip(rule.nodes, rule.weights)):
        axes_X.append(np.sqrt(np.maximum(0.0, x[i] ** 2 + y[i] ** 2 - 2.0 * x[i] * y[i] * t)))
        axes_w.append(w)
    mesh = np.meshgrid(*axes_X, indexing="ij")
    weights = np.prod(np.meshgrid(*axes_w, indexing="ij"), axis=0)
    pts = np.stack([m.ravel() for m in mesh], axis=-1)
    return math.fsum((weights.ravel() * spec.evaluate(pts)).tolist())


# ===========================
# Expectation table
# ===========================

def reference_functions() -> List[FunctionSpec]:
    return [gaussian(), poly_gaussian([1.0, 0.5])]


def _fmt(v) -> str:
    return ",".join(f"{float(c):g}" for c in np.atleast_1d(v))


def build_table(alpha, radius, nodes, theta_nodes: int) -> Dict[str, Any]:
    alpha = as_alpha(alpha)
    entries: List[Dict[str, Any]] = []
    orders = sorted(set(BESSEL_ORDERS) | set(alpha.alpha))
    for g in orders:
        for x in BESSEL_POINTS:
            entries.append({
                "check_id": f"oracle.bessel[gamma={g:g},x={x:g}]",
                "kind": "bessel",
                "gamma": g,
                "x": x,
                "value": bessel_series_oracle(g, x),
            })
    for spec in reference_functions():
        for lam in TRANSFORM_POINTS:
            point = [lam] * alpha.n
            entries.append({
                "check_id": f"oracle.transform[{spec.kind},lambda={_fmt(point)}]",
                "kind": "transform",
                "function": spec.model_dump(),
                "lam": point,
                "value": high_resolution_transform(spec, alpha, point, radius, nodes),
            })
        for xv, yv in TRANSLATE_PAIRS:
            x, y = [xv] * alpha.n, [yv] * alpha.n
            entries.append({
                "check_id": f"oracle.translate[{spec.kind},x={_fmt(x)},y={_fmt(y)}]",
                "kind": "translate",
                "function": spec.model_dump(),
                "x": x,
                "y": y,
                "value": high_resolution_translate(spec, y, x, alpha, theta_nodes),
            })
    logger.info(f"Built oracle table with {len(entries)} entries for alpha={alpha.alpha}")
    return {
        "alpha": list(alpha.alpha),
        "radius": list(np.atleast_1d(radius).astype(float)),
        "nodes": [int(k) for k in np.atleast_1d(nodes)],
        "theta_nodes": int(theta_nodes),
        "entries": entries,
    }


def regenerate_table(config, path: Optional[str] = None) -> str:
    """Recompute the table for a RunConfig's alpha and reference grid and write it."""
    path = path or app_conf.ORACLE_PATH
    phys = config.phys_grid()
    table = build_table(config.alpha_params(), phys.radius, phys.nodes_per_axis, config.theta_nodes)
    table["generated_at"] = datetime.now(timezone.utc).isoformat()
    try:
        os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(table, fh, indent=2)
    except OSError as e:
        logger.error(f"Failed to write oracle table {path}: {str(e)}")
        raise
    logger.info(f"Wrote oracle table to {path}")
    return path


def load_table(path: Optional[str] = None) -> Optional[Dict[str, Any]]:
    path = path or app_conf.ORACLE_PATH
    if not os.path.exists(path):
        logger.debug(f"No oracle table at {path}")
        return None
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
