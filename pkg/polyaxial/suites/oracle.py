from typing import Any, Dict, List

import numpy as np

from polyaxial.function_specs import FunctionSpec
from polyaxial.oracle import pointwise_transform
from polyaxial.quadrature import sample
from polyaxial.special_functions import normalized_bessel
from polyaxial.suites.base import SuiteCheck, SuiteContext, match_check
from polyaxial.translation import translate

SUITE = "oracle"


def _entry_check(ctx: SuiteContext, entry: Dict[str, Any]) -> SuiteCheck:
    tol = ctx.tol
    kind = entry["kind"]
    expected = float(entry["value"])
    if kind == "bessel":
        g, x = entry["gamma"], entry["x"]
        return match_check(
            SUITE, entry["check_id"], "normalized Bessel series at 50 digits", tol.bessel_oracle,
            lambda: (normalized_bessel(g, x), expected), gamma=g, x=x,
        )
    spec = FunctionSpec.model_validate(entry["function"])
    if kind == "transform":
        lam = entry["lam"]
        return match_check(
            SUITE, entry["check_id"], "F_α f(λ) against a fourfold refined grid", tol.gaussian_pair,
            lambda: (pointwise_transform(sample(spec, ctx.phys), lam), expected), lam=lam, function=spec.label(),
        )
    x, y = entry["x"], entry["y"]
    return match_check(
        SUITE, entry["check_id"], "T_y f(x) against a fourfold refined θ-rule", tol.theta_vs_kernel,
        lambda: (translate(spec, y, x, ctx.rule), expected), x=x, y=y, function=spec.label(),
    )


def checks(ctx: SuiteContext, table: Dict[str, Any]) -> List[SuiteCheck]:
    """One record per table entry; tables for another alpha contribute nothing."""
    if tuple(float(a) for a in table.get("alpha", [])) != ctx.alpha.alpha:
        return []
    if not np.allclose(table.get("radius", []), ctx.phys.radius):
        return []
    return [_entry_check(ctx, entry) for entry in table.get("entries", [])]
