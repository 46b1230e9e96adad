import logging

import numpy as np

from polyaxial.commands.reporting import Report
from polyaxial.fourier_bessel import forward, inversion_defect, kernel_matrices, plancherel_defect
from polyaxial.function_specs import exact_transform, support_radius
from polyaxial.quadrature import sample
from polyaxial.schemas import RunConfig
from polyaxial.suites.base import bound_check

logger = logging.getLogger(__name__)

COMMAND = "transform"


def run(config: RunConfig) -> Report:
    """Forward transform of config.function with Plancherel and inversion defects."""
    try:
        phys = config.phys_grid()
        freq = config.frequency_grid()
        spec = config.function
        tol = config.tolerances
        km = kernel_matrices(phys, freq)
        f = sample(spec, phys)
        F = forward(f, freq, km)
        logger.info(f"Transformed {spec.label()} on N={phys.nodes_per_axis}, R={phys.radius}")

        plancherel_tol = tol.plancherel_bump if support_radius(spec) else tol.plancherel
        checks = [
            bound_check(
                COMMAND, "transform.plancherel", "‖f‖_{L²_α} = c_α ‖F_α f‖_{L²_α}", plancherel_tol,
                lambda: (plancherel_defect(f, freq, km), 0.0), function=spec.label(),
            ),
            bound_check(
                COMMAND, "transform.inversion", "f = c_α² F_α F_α f", tol.inversion,
                lambda: (inversion_defect(f, freq, km), 0.0), function=spec.label(),
            ),
        ]
        exact = exact_transform(spec, config.alpha_params())
        if exact is not None:
            def exact_error():
                reference = exact(freq.points)
                return float(np.max(np.abs(F.values - reference)) / np.max(np.abs(reference))), 0.0

            checks.append(bound_check(
                COMMAND, "transform.exact", "F_α f against its closed form", tol.exact_transform,
                exact_error, function=spec.label(),
            ))

        records = [c.run() for c in checks]
        return Report(COMMAND, records, {"function": spec.model_dump(), "spectrum": F.to_json()})
    except Exception as e:
        logger.error(f"Transform failed: {str(e)}")
        raise
