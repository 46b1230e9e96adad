import logging

from polyaxial.commands.reporting import Report
from polyaxial.schemas import RunConfig
from polyaxial.sobolev import SpectralDistribution
from polyaxial.spectral_pde import (
    EvenPolynomial,
    helmholtz_polynomial,
    regularity_report,
    solve_polynomial,
    solve_roundtrip_defect,
)
from polyaxial.suites.base import bound_check

logger = logging.getLogger(__name__)

COMMAND = "solve"


def run(config: RunConfig) -> Report:
    """P(−Δ_α)u = f for config.poly, or (k² − Δ_α)u = f when no polynomial is given."""
    try:
        alpha = config.alpha_params()
        tol = config.tolerances
        P = EvenPolynomial(coeffs=config.poly) if config.poly else helmholtz_polynomial(config.k)
        f = SpectralDistribution.from_spec(config.function, alpha, config.frequency_grid(), config.phys_grid())
        u = solve_polynomial(f, P)
        report = regularity_report(f, u, config.s, P.degree, P, tol.regularity)

        checks = [
            bound_check(
                COMMAND, "solve.roundtrip", "P(‖ξ‖²) F_α u = F_α f", tol.roundtrip,
                lambda: (solve_roundtrip_defect(f, u, P), 0.0), P=list(P.coeffs),
            ),
            bound_check(
                COMMAND, f"solve.regularity[gain={P.degree}]",
                "‖u‖_{H^{s+m}_α} ≤ sup_t (1+t)^m / P(t) ‖f‖_{H^s_α}", tol.regularity,
                lambda: (report.ratio, report.bound), P=list(P.coeffs), s=config.s, gain=P.degree,
            ),
        ]
        records = [c.run() for c in checks]
        extras = {
            "function": config.function.model_dump(),
            "polynomial": list(P.coeffs),
            "regularity": report.model_dump(by_alias=True),
            "solution": u.spectral.to_json(),
        }
        return Report(COMMAND, records, extras)
    except Exception as e:
        logger.error(f"Solve failed: {str(e)}")
        raise
