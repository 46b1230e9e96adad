import json
import logging
import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from polyaxial.fourier_bessel import KernelMatrices, kernel_matrices
from polyaxial.function_specs import FunctionSpec
from polyaxial.quadrature import AlphaParams, QuadGrid, build_grid
from polyaxial.schemas import CheckRecord, RunConfig, Tolerances
from polyaxial.translation import ThetaRule, theta_rule

logger = logging.getLogger(__name__)

CONVOLUTION_RADIUS_2D = 10.0
CONVOLUTION_NODES_2D = 32
THETA_NODES_2D = 16
REFS_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "property_refs.json")


@dataclass(frozen=True)
class SuiteCheck:
    """One record to produce: evaluate() gives (lhs, rhs), compare decides pass."""

    check_id: str
    suite: str
    paper_ref: str
    tolerance: float
    evaluate: Callable[[], Tuple[float, float]] = field(repr=False)
    mode: str = "bound"
    parameters: Dict[str, Any] = field(default_factory=dict)

    def compare(self, lhs: float, rhs: float) -> bool:
        if not (np.isfinite(lhs) and np.isfinite(rhs)):
            return False
        if self.mode == "match":
            return abs(lhs - rhs) <= self.tolerance
        if self.mode == "equal":
            return lhs == rhs
        return lhs <= rhs + self.tolerance

    def run(self) -> CheckRecord:
        lhs, rhs = self.evaluate()
        lhs, rhs = float(lhs), float(rhs)
        return CheckRecord(
            check_id=self.check_id,
            suite=self.suite,
            paper_ref=self.paper_ref,
            parameters=self.parameters,
            lhs=lhs,
            rhs=rhs,
            tolerance=self.tolerance,
            passed=self.compare(lhs, rhs),
        )


@lru_cache(maxsize=1)
def property_refs() -> Dict[str, str]:
    """Check family -> where the property is stated, from data/property_refs.json."""
    try:
        with open(REFS_PATH, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"Cannot load property references from {REFS_PATH}: {str(e)}")
        raise


def cite(check_id: str, formula: str) -> str:
    """'<location>, <formula>' for known check families; the bare formula otherwise."""
    where = property_refs().get(check_id.split("[", 1)[0])
    return f"{where}, {formula}" if where else formula


def bound_check(suite: str, check_id: str, paper_ref: str, tolerance: float, evaluate, **parameters) -> SuiteCheck:
    """Passes when lhs ≤ rhs + tolerance; a defect is a bound with rhs = 0."""
    return SuiteCheck(check_id, suite, cite(check_id, paper_ref), tolerance, evaluate, "bound", parameters)


def match_check(suite: str, check_id: str, paper_ref: str, tolerance: float, evaluate, **parameters) -> SuiteCheck:
    return SuiteCheck(check_id, suite, cite(check_id, paper_ref), tolerance, evaluate, "match", parameters)


def equal_check(suite: str, check_id: str, paper_ref: str, evaluate, **parameters) -> SuiteCheck:
    return SuiteCheck(check_id, suite, cite(check_id, paper_ref), 0.0, evaluate, "equal", parameters)


class SuiteContext:
    """Grids, rules and kernel matrices shared read-only by every check of a run."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.alpha: AlphaParams = config.alpha_params()
        self.phys: QuadGrid = config.phys_grid()
        self.freq: QuadGrid = config.frequency_grid()
        self.function: FunctionSpec = config.function
        self.tol: Tolerances = config.tolerances

    @property
    def n(self) -> int:
        return self.alpha.n

    @cached_property
    def kernels(self) -> KernelMatrices:
        return kernel_matrices(self.phys, self.freq)

    @cached_property
    def rule(self) -> ThetaRule:
        M = self.config.theta_nodes if self.n == 1 else min(self.config.theta_nodes, THETA_NODES_2D)
        return theta_rule(self.alpha, M)

    @cached_property
    def conv_grid(self) -> QuadGrid:
        """Output grid for direct convolutions; smaller when n = 2."""
        nodes = self.config.convolution_nodes
        if self.n == 1:
            if nodes is None:
                return self.phys
            return build_grid(self.alpha, self.phys.radius, nodes)
        return build_grid(self.alpha, CONVOLUTION_RADIUS_2D, nodes or CONVOLUTION_NODES_2D)

    def warm(self) -> None:
        """Build shared cached objects before checks fan out to threads."""
        _ = self.kernels, self.rule, self.phys.points, self.freq.points, self.freq.norm_sq
        if self.n <= 2:
            _ = self.conv_grid.points


CheckFactory = Callable[[SuiteContext], List[SuiteCheck]]
