import logging

from polyaxial.commands.reporting import Report
from polyaxial.function_specs import is_integrable, support_radius
from polyaxial.quadrature import build_grid, lp_norm, sample
from polyaxial.schemas import RunConfig
from polyaxial.sobolev import (
    SobolevIndex,
    SpectralDistribution,
    dirac_membership,
    dirac_membership_numeric,
    isometry_defect,
    sobolev_norm,
)
from polyaxial.suites.base import bound_check, equal_check, match_check

logger = logging.getLogger(__name__)

COMMAND = "norm"


def _relative(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def run(config: RunConfig) -> Report:
    """E^{s,p} norm of config.function, an s-sweep, and the Dirac membership table."""
    try:
        alpha = config.alpha_params()
        freq = config.frequency_grid()
        spec = config.function
        tol = config.tolerances
        phys = config.phys_grid()
        if config.grid is None and support_radius(spec):
            phys = build_grid(alpha, support_radius(spec), phys.nodes_per_axis)
        T = SpectralDistribution.from_spec(spec, alpha, freq, phys)
        idx = SobolevIndex(config.s, config.p)
        value = sobolev_norm(T, idx)
        logger.info(f"‖{spec.label()}‖_E^{{{config.s},{config.p}}} = {value:.10e}")

        checks = [
            bound_check(
                COMMAND, "norm.isometry", "T ↦ c_α(1+‖ξ‖²)^s F_α T is an isometry onto L^p_α", tol.isometry,
                lambda: (0.0 if value == 0 else isometry_defect(T, idx) / value, 0.0), s=config.s, p=config.p,
            ),
        ]
        if is_integrable(spec):
            plancherel_tol = tol.plancherel_bump if support_radius(spec) else tol.plancherel
            checks.append(match_check(
                COMMAND, "norm.l2_identity", "E^{0,2}_α = L²_α with equal norms", plancherel_tol,
                lambda: (_relative(sobolev_norm(T, SobolevIndex(0.0, 2.0)), lp_norm(sample(spec, phys), 2)), 0.0),
            ))

        s_list = sorted(config.s_list)
        sweep = [sobolev_norm(T, SobolevIndex(s, config.p)) for s in s_list]
        for i in range(len(s_list) - 1):
            checks.append(bound_check(
                COMMAND, f"norm.monotone[s={s_list[i]:g}<{s_list[i + 1]:g}]",
                "‖T‖_{E^{s,p}_α} ≤ ‖T‖_{E^{t,p}_α} for s ≤ t", 0.0,
                lambda i=i: (sweep[i], sweep[i + 1]), s=s_list[i], t=s_list[i + 1], p=config.p,
            ))

        x0 = config.dirac_x()
        table = []
        for s, p in config.dirac_pairs:
            member = dirac_membership(s, p, alpha)
            table.append({"s": s, "p": p, "member": member})
            checks.append(equal_check(
                COMMAND, f"norm.dirac[s={s:g},p={p:g}]", "δ_x ∈ E^{s,p}_α iff 2sp + (2−p)(|α| + n/2) < −n",
                lambda s=s, p=p, member=member: (float(dirac_membership_numeric(s, p, x0, alpha, freq)), float(member)),
                s=s, p=p, x=list(x0),
            ))

        records = [c.run() for c in checks]
        extras = {
            "function": spec.model_dump(),
            "norm": {"s": config.s, "p": config.p, "value": value},
            "sweep": [{"s": s, "p": config.p, "value": v} for s, v in zip(s_list, sweep)],
            "dirac_table": table,
        }
        return Report(COMMAND, records, extras)
    except Exception as e:
        logger.error(f"Norm computation failed: {str(e)}")
        raise
