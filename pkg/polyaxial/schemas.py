import json
import logging
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from polyaxial.config import app_conf
from polyaxial.exceptions import ConfigError
from polyaxial.function_specs import FunctionSpec
from polyaxial.quadrature import AlphaParams, QuadGrid, build_grid

logger = logging.getLogger(__name__)

DEFAULT_DIRAC_PAIRS: List[Tuple[float, float]] = [
    (-2.0, 1.0),
    (0.0, 1.0),
    (-1.0, 2.0),
    (0.0, 2.0),
    (-0.5, 1.0),
    (-3.0, 1.5),
]


# ===========================
# Run configuration
# ===========================

class GridSpec(BaseModel):
    radius: List[float] = Field(..., min_length=1)
    nodes: List[int] = Field(..., min_length=1)

    @field_validator("radius")
    @classmethod
    def radius_positive(cls, value):
        for i, r in enumerate(value):
            if not r > 0:
                raise ValueError(f"radius[{i}] must be positive")
        return value

    @field_validator("nodes")
    @classmethod
    def enough_nodes(cls, value):
        for i, k in enumerate(value):
            if k < 2:
                raise ValueError(f"nodes[{i}] must be at least 2")
        return value


class Tolerances(BaseModel):
    gaussian_pair: float = Field(1e-8, gt=0)
    exact_transform: float = Field(1e-7, gt=0)
    inversion: float = Field(1e-6, gt=0)
    plancherel: float = Field(1e-6, gt=0)
    plancherel_bump: float = Field(1e-4, gt=0)
    sup_bound: float = Field(1e-10, gt=0)
    eigenrelation: float = Field(1e-4, gt=0)
    modulation: float = Field(1e-6, gt=0)
    duality_pairing: float = Field(1e-10, gt=0)
    bessel_ode: float = Field(1e-5, gt=0)
    bessel_closed_form: float = Field(1e-12, gt=0)
    bessel_oracle: float = Field(1e-10, gt=0)
    kernel_mass: float = Field(1e-10, gt=0)
    theta_vs_kernel: float = Field(1e-6, gt=0)
    product_formula: float = Field(1e-8, gt=0)
    contraction: float = Field(1e-8, gt=0)
    convolution_theorem: float = Field(1e-5, gt=0)
    product_transform: float = Field(1e-4, gt=0)
    binomial: float = Field(1e-12, gt=0)
    isometry: float = Field(1e-10, gt=0)
    laplacian_mapping: float = Field(1e-10, gt=0)
    duality: float = Field(1e-10, gt=0)
    extremal: float = Field(1e-8, gt=0)
    representation: float = Field(1e-8, gt=0)
    poincare_slope: float = Field(0.15, gt=0)
    roundtrip: float = Field(1e-12, gt=0)
    regularity: float = Field(1e-8, gt=0)


class OutputSpec(BaseModel):
    path: Optional[str] = None
    format: Literal["json", "csv"] = "json"


class RunConfig(BaseModel):
    alpha: List[float] = Field(..., min_length=1)
    grid: Optional[GridSpec] = None
    freq_grid: Optional[GridSpec] = None
    function: FunctionSpec = Field(default_factory=FunctionSpec)
    s: float = 0.0
    t: float = 0.0
    p: float = Field(2.0, ge=1)
    s_list: List[float] = Field(default_factory=lambda: [0.0, 0.5, 1.0])
    k: float = 1.0
    poly: Optional[List[float]] = Field(None, min_length=1)
    eps_list: List[float] = Field(default_factory=lambda: [0.5, 0.25, 0.125])
    dirac_point: Optional[List[float]] = None
    dirac_pairs: List[Tuple[float, float]] = Field(default_factory=lambda: list(DEFAULT_DIRAC_PAIRS))
    theta_nodes: int = Field(default_factory=lambda: app_conf.THETA_NODES, ge=2)
    convolution_nodes: Optional[int] = Field(None, ge=2)
    tolerances: Tolerances = Field(default_factory=Tolerances)
    seed: int = 0
    output: OutputSpec = Field(default_factory=OutputSpec)

    @field_validator("alpha")
    @classmethod
    def alpha_admissible(cls, value):
        for i, a in enumerate(value):
            if not a > -0.5:
                raise ValueError(f"alpha[{i}] ≤ −1/2")
        return value

    @field_validator("eps_list")
    @classmethod
    def eps_in_unit_interval(cls, value):
        for i, e in enumerate(value):
            if not 0 < e <= 1:
                raise ValueError(f"eps_list[{i}] must lie in (0, 1]")
        return value

    @model_validator(mode="after")
    def dimensions_agree(self):
        n = len(self.alpha)
        for name in ("grid", "freq_grid"):
            spec = getattr(self, name)
            if spec is None:
                continue
            if len(spec.radius) not in (1, n) or len(spec.nodes) not in (1, n):
                raise ValueError(f"{name} must give 1 or {n} radius/nodes entries")
        if self.dirac_point is not None and len(self.dirac_point) != n:
            raise ValueError(f"dirac_point must have {n} coordinates")
        return self

    # ===========================
    # Derived objects
    # ===========================

    def alpha_params(self) -> AlphaParams:
        return AlphaParams(tuple(self.alpha))

    def _build(self, spec: Optional[GridSpec]) -> QuadGrid:
        if spec is None:
            return build_grid(self.alpha_params(), app_conf.DEFAULT_RADIUS, app_conf.DEFAULT_NODES)
        return build_grid(self.alpha_params(), spec.radius, spec.nodes)

    def phys_grid(self) -> QuadGrid:
        return self._build(self.grid)

    def frequency_grid(self) -> QuadGrid:
        return self._build(self.freq_grid)

    def dirac_x(self) -> List[float]:
        return self.dirac_point or [1.0] * len(self.alpha)


def load_config(path: str) -> RunConfig:
    """Read and validate a RunConfig JSON document; failures name the field."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {str(e)}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"config {path} is not valid JSON: {str(e)}")
    return parse_config(raw)


def parse_config(raw: Dict[str, Any]) -> RunConfig:
    try:
        return RunConfig.model_validate(raw)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(part) for part in first["loc"]) or "config"
        message = f"{where}: {first['msg']}"
        logger.error(f"Invalid config: {message}")
        raise ConfigError(message)


def config_schema() -> Dict[str, Any]:
    return RunConfig.model_json_schema()


# ===========================
# Report records
# ===========================

class CheckRecord(BaseModel):
    check_id: str
    suite: str
    paper_ref: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    lhs: float
    rhs: float
    tolerance: float
    passed: bool = Field(alias="pass")

    class Config:
        populate_by_name = True


class RegularityReport(BaseModel):
    f_norm: float
    u_norm: float
    ratio: float
    bound: float
    s: float
    gain: float
    passed: bool = Field(alias="pass")

    class Config:
        populate_by_name = True
