from typing import List

import numpy as np

from polyaxial.fourier_bessel import (
    dirac_spectrum,
    dual_pairing_defect,
    eigenrelation_defect,
    forward,
    inversion_defect,
    plancherel_defect,
    sup_bound_excess,
)
from polyaxial.function_specs import bump, exact_transform, gaussian, poly_gaussian
from polyaxial.quadrature import build_grid, integrate, measure_moment, sample
from polyaxial.suites.base import SuiteCheck, SuiteContext, bound_check, match_check
from polyaxial.translation import modulation_defect

SUITE = "transform"
PAIR_WINDOW = 5.0


def _gaussian_pair_error(ctx: SuiteContext) -> float:
    F = forward(sample(gaussian(), ctx.phys), ctx.freq, ctx.kernels)
    window = np.all(ctx.freq.points <= PAIR_WINDOW, axis=1)
    exact = exact_transform(gaussian(), ctx.alpha)(ctx.freq.points[window])
    return float(np.max(np.abs(F.values[window] - exact) / np.abs(exact)))


def _exact_transform_error(ctx: SuiteContext, spec) -> float:
    F = forward(sample(spec, ctx.phys), ctx.freq, ctx.kernels)
    exact = exact_transform(spec, ctx.alpha)(ctx.freq.points)
    return float(np.max(np.abs(F.values - exact)) / np.max(np.abs(exact)))


def _moment_ratio(ctx: SuiteContext) -> float:
    box = integrate(sample(lambda pts: np.ones(len(pts)), ctx.phys))
    return box / measure_moment(ctx.alpha, ctx.phys.radius)


def checks(ctx: SuiteContext) -> List[SuiteCheck]:
    tol = ctx.tol
    smooth = [gaussian(), poly_gaussian([1.0, 0.5])]
    bump_spec = bump()
    bump_grid = build_grid(ctx.alpha, bump_spec.parsed.radius, ctx.phys.nodes_per_axis)
    x0 = ctx.config.dirac_x()

    out: List[SuiteCheck] = [
        match_check(
            SUITE, "transform.measure_moment", "dμ_α(x) = ∏ x_i^{2α_i+1} dx_i", 1e-8,
            lambda: (_moment_ratio(ctx), 1.0), radius=list(ctx.phys.radius),
        ),
        bound_check(
            SUITE, "transform.gaussian_pair", "F_α(e^{−‖x‖²/2}) = c_α^{−1} e^{−‖λ‖²/2}", tol.gaussian_pair,
            lambda: (_gaussian_pair_error(ctx), 0.0), window=PAIR_WINDOW,
        ),
        bound_check(
            SUITE, "transform.exact[poly_gaussian]", "transform of ‖x‖^{2j} e^{−a‖x‖²/2} by scale differentiation",
            tol.exact_transform, lambda: (_exact_transform_error(ctx, smooth[1]), 0.0),
        ),
        bound_check(
            SUITE, "transform.eigenrelation", "F_α(Δ_α f)(ξ) = −‖ξ‖² F_α f(ξ)", tol.eigenrelation,
            lambda: (eigenrelation_defect(smooth[0], ctx.phys, ctx.freq, 1e-3), 0.0), h=1e-3,
        ),
        bound_check(
            SUITE, "transform.duality", "∫ f F_α g dμ_α = ∫ g F_α f dμ_α", tol.duality_pairing,
            lambda: (dual_pairing_defect(sample(smooth[0], ctx.phys), sample(smooth[1], ctx.phys)), 0.0),
        ),
        bound_check(
            SUITE, "transform.dirac_bounded", "|F_α δ_x(ξ)| = |∏ j_{α_i}(x_i ξ_i)| ≤ 1", 1e-12,
            lambda: (np.abs(dirac_spectrum(x0, ctx.freq).values).max(), 1.0), x=list(x0),
        ),
        bound_check(
            SUITE, "transform.modulation", "F_α(T_x f)(ξ) = ∏ j_{α_i}(x_i ξ_i) F_α f(ξ)", tol.modulation,
            lambda: (modulation_defect(smooth[0], x0, ctx.phys, ctx.freq, ctx.rule), 0.0), x=list(x0),
        ),
        bound_check(
            SUITE, "transform.plancherel[bump]", "‖f‖_{L²_α} = c_α ‖F_α f‖_{L²_α}", tol.plancherel_bump,
            lambda: (plancherel_defect(sample(bump_spec, bump_grid), ctx.freq), 0.0),
            function=bump_spec.label(),
        ),
        bound_check(
            SUITE, "transform.sup_bound[bump]", "‖F_α f‖_∞ ≤ ‖f‖_{L¹_α}, excess relative to ‖f‖_{L¹_α}", tol.sup_bound,
            lambda: (sup_bound_excess(sample(bump_spec, bump_grid), ctx.freq), 0.0),
            function=bump_spec.label(),
        ),
    ]

    for spec in smooth:
        label = spec.label()
        out.append(bound_check(
            SUITE, f"transform.inversion[{spec.kind}]", "f = c_α² F_α F_α f", tol.inversion,
            lambda spec=spec: (inversion_defect(sample(spec, ctx.phys), ctx.freq, ctx.kernels), 0.0),
            function=label,
        ))
        out.append(bound_check(
            SUITE, f"transform.plancherel[{spec.kind}]", "‖f‖_{L²_α} = c_α ‖F_α f‖_{L²_α}", tol.plancherel,
            lambda spec=spec: (plancherel_defect(sample(spec, ctx.phys), ctx.freq, ctx.kernels), 0.0),
            function=label,
        ))
        out.append(bound_check(
            SUITE, f"transform.sup_bound[{spec.kind}]", "‖F_α f‖_∞ ≤ ‖f‖_{L¹_α}, excess relative to ‖f‖_{L¹_α}", tol.sup_bound,
            lambda spec=spec: (sup_bound_excess(sample(spec, ctx.phys), ctx.freq, ctx.kernels), 0.0),
            function=label,
        ))
    return out
