"""Closed families of even test functions with exact evaluators and transforms."""
import logging
from typing import Any, Callable, Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from polyaxial.exceptions import DomainError
from polyaxial.quadrature import AlphaParams, as_alpha

logger = logging.getLogger(__name__)

SpecKind = Literal["gaussian", "bump", "exp_bump", "poly_gaussian", "gaussian_mixture", "constant"]


# ===========================
# Per-kind parameters
# ===========================

class GaussianParams(BaseModel):
    scale: float = Field(1.0, gt=0)
    amplitude: float = 1.0


class BumpParams(BaseModel):
    radius: float = Field(1.0, gt=0)
    order: float = Field(8.0, ge=4)
    amplitude: float = 1.0


class ExpBumpParams(BaseModel):
    radius: float = Field(1.0, gt=0)
    amplitude: float = 1.0


class PolyGaussianParams(BaseModel):
    coeffs: List[float] = Field(..., min_length=1)
    scale: float = Field(1.0, gt=0)
    amplitude: float = 1.0


class GaussianMixtureParams(BaseModel):
    weights: List[float] = Field(..., min_length=1)
    scales: List[float] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_components(self):
        if len(self.weights) != len(self.scales):
            raise ValueError("weights and scales must have the same length")
        if any(a <= 0 for a in self.scales):
            raise ValueError("mixture scales must be positive")
        return self


class ConstantParams(BaseModel):
    value: float = 1.0


PARAM_MODELS = {
    "gaussian": GaussianParams,
    "bump": BumpParams,
    "exp_bump": ExpBumpParams,
    "poly_gaussian": PolyGaussianParams,
    "gaussian_mixture": GaussianMixtureParams,
    "constant": ConstantParams,
}


class FunctionSpec(BaseModel):
    """{"kind": ..., "params": {...}} as it appears in a run config."""

    kind: SpecKind = "gaussian"
    params: Dict[str, Any] = Field(default_factory=dict)

    class Config:
        frozen = True

    @field_validator("params")
    @classmethod
    def params_are_plain(cls, value):
        return dict(value)

    @model_validator(mode="after")
    def check_params(self):
        PARAM_MODELS[self.kind](**self.params)
        return self

    @property
    def parsed(self):
        return PARAM_MODELS[self.kind](**self.params)

    def evaluate(self, points) -> np.ndarray:
        return evaluate(self, points)

    def label(self) -> str:
        shown = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.kind}({shown})"


def gaussian(scale: float = 1.0, amplitude: float = 1.0) -> FunctionSpec:
    return FunctionSpec(kind="gaussian", params={"scale": scale, "amplitude": amplitude})


def bump(radius: float = 1.0, order: float = 8.0, amplitude: float = 1.0) -> FunctionSpec:
    return FunctionSpec(kind="bump", params={"radius": radius, "order": order, "amplitude": amplitude})


def poly_gaussian(coeffs, scale: float = 1.0, amplitude: float = 1.0) -> FunctionSpec:
    return FunctionSpec(
        kind="poly_gaussian",
        params={"coeffs": [float(c) for c in coeffs], "scale": scale, "amplitude": amplitude},
    )


def gaussian_mixture(weights, scales) -> FunctionSpec:
    return FunctionSpec(
        kind="gaussian_mixture",
        params={"weights": [float(w) for w in weights], "scales": [float(a) for a in scales]},
    )


def constant(value: float = 1.0) -> FunctionSpec:
    return FunctionSpec(kind="constant", params={"value": value})


# ===========================
# Evaluation
# ===========================

def _bump_factor(u: np.ndarray, order: float) -> np.ndarray:
    inside = u < 1.0
    out = np.zeros_like(u)
    out[inside] = (1.0 - u[inside] ** 2) ** order
    return out


def _exp_bump_factor(u: np.ndarray) -> np.ndarray:
    inside = u < 1.0
    out = np.zeros_like(u)
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - u[inside] ** 2))
    return out


def evaluate(spec: FunctionSpec, x):
    """Exact value at one point (n,) or at every row of a (K, n) array."""
    pts = np.asarray(x, dtype=float)
    single = pts.ndim == 1
    pts = np.atleast_2d(pts)
    prm = spec.parsed
    r2 = np.sum(pts ** 2, axis=1)

    if spec.kind == "gaussian":
        values = prm.amplitude * np.exp(-0.5 * prm.scale * r2)
    elif spec.kind == "bump":
        values = prm.amplitude * np.prod(_bump_factor(np.abs(pts) / prm.radius, prm.order), axis=1)
    elif spec.kind == "exp_bump":
        values = prm.amplitude * np.prod(_exp_bump_factor(np.abs(pts) / prm.radius), axis=1)
    elif spec.kind == "poly_gaussian":
        poly = np.polynomial.polynomial.polyval(r2, prm.coeffs)
        values = prm.amplitude * poly * np.exp(-0.5 * prm.scale * r2)
    elif spec.kind == "gaussian_mixture":
        values = sum(w * np.exp(-0.5 * a * r2) for w, a in zip(prm.weights, prm.scales))
    else:
        values = np.full(r2.shape, prm.value)

    return float(values[0]) if single else values


# ===========================
# Exact transforms
# ===========================

def _scale_derivative_terms(power: int, nu: float) -> Dict[tuple, float]:
    """(−2∂_a)^power of a^{−ν} e^{−L/(2a)} as {(p, q): coef} over L^p a^{−q} e^{−L/(2a)}."""
    terms = {(0, nu): 1.0}
    for _ in range(power):
        nxt: Dict[tuple, float] = {}
        for (p, q), coef in terms.items():
            nxt[(p, q + 1)] = nxt.get((p, q + 1), 0.0) + 2.0 * q * coef
            nxt[(p + 1, q + 2)] = nxt.get((p + 1, q + 2), 0.0) - coef
        terms = nxt
    return terms


def exact_transform(spec: FunctionSpec, alpha) -> Optional[Callable[[np.ndarray], np.ndarray]]:
    """λ ↦ F_α(spec)(λ) on (K, n) frequency points, or None without a closed form."""
    alpha = as_alpha(alpha)
    nu = alpha.abs_alpha + alpha.n
    inv_c = 1.0 / alpha.c_alpha
    prm = spec.parsed

    if spec.kind == "gaussian":
        def transform(lam):
            L = np.sum(np.atleast_2d(lam) ** 2, axis=1)
            return prm.amplitude * prm.scale ** (-nu) * inv_c * np.exp(-L / (2.0 * prm.scale))
        return transform

    if spec.kind == "gaussian_mixture":
        def transform(lam):
            L = np.sum(np.atleast_2d(lam) ** 2, axis=1)
            return sum(
                w * a ** (-nu) * inv_c * np.exp(-L / (2.0 * a))
                for w, a in zip(prm.weights, prm.scales)
            )
        return transform

    if spec.kind == "poly_gaussian":
        a = prm.scale
        expansions = [(c, _scale_derivative_terms(j, nu)) for j, c in enumerate(prm.coeffs) if c != 0]

        def transform(lam):
            L = np.sum(np.atleast_2d(lam) ** 2, axis=1)
            total = np.zeros_like(L)
            for c, terms in expansions:
                for (p, q), coef in terms.items():
                    total = total + c * coef * L ** p * a ** (-q)
            return prm.amplitude * inv_c * total * np.exp(-L / (2.0 * a))
        return transform

    return None


def exact_moment(spec: FunctionSpec, alpha) -> Optional[float]:
    """∫ spec dμ_α, i.e. the transform at λ = 0, when a closed form exists."""
    alpha = as_alpha(alpha)
    transform = exact_transform(spec, alpha)
    if transform is None:
        return None
    return float(transform(np.zeros((1, alpha.n)))[0])


# ===========================
# Family helpers
# ===========================

def is_integrable(spec: FunctionSpec) -> bool:
    return not (spec.kind == "constant" and spec.parsed.value != 0)


def support_radius(spec: FunctionSpec) -> Optional[float]:
    if spec.kind in ("bump", "exp_bump"):
        return spec.parsed.radius
    return None


def scaled(spec: FunctionSpec, eps: float) -> FunctionSpec:
    """The profile x ↦ f(x/ε)."""
    if not (eps > 0 and np.isfinite(eps)):
        raise DomainError(f"scale factor must be positive, got {eps}")
    params = dict(spec.params)
    if spec.kind in ("bump", "exp_bump"):
        params["radius"] = spec.parsed.radius * eps
    elif spec.kind == "gaussian":
        params["scale"] = spec.parsed.scale / eps ** 2
    elif spec.kind == "poly_gaussian":
        prm = spec.parsed
        params["coeffs"] = [c * eps ** (-2 * j) for j, c in enumerate(prm.coeffs)]
        params["scale"] = prm.scale / eps ** 2
    elif spec.kind == "gaussian_mixture":
        params["scales"] = [a / eps ** 2 for a in spec.parsed.scales]
    return FunctionSpec(kind=spec.kind, params=params)


def unit_mass(spec: FunctionSpec, alpha, moment: float) -> FunctionSpec:
    """Rescale the amplitude so ∫ spec dμ_α = 1, given the current moment."""
    if moment == 0:
        raise DomainError("cannot normalize a function with zero mass")
    params = dict(spec.params)
    params["amplitude"] = params.get("amplitude", 1.0) / moment
    logger.debug(f"Normalized {spec.kind} to unit mass for alpha={as_alpha(alpha).alpha}")
    return FunctionSpec(kind=spec.kind, params=params)
