from typing import List

import numpy as np

from polyaxial.exceptions import NonPositivePolynomialError
from polyaxial.sobolev import SpectralDistribution
from polyaxial.spectral_pde import (
    EvenPolynomial,
    helmholtz_polynomial,
    regularity_report,
    solve_helmholtz,
    solve_polynomial,
    solve_roundtrip_defect,
)
from polyaxial.suites.base import SuiteCheck, SuiteContext, bound_check, equal_check

SUITE = "pde"
HELMHOLTZ_KS = (1.0, 2.0)
REGULARITY_ORDERS = (0.0, 1.0)
DEFAULT_POLYNOMIAL = EvenPolynomial(coeffs=[4.0, 0.0, 1.0])


def _rhs(ctx: SuiteContext) -> SpectralDistribution:
    return SpectralDistribution.from_spec(ctx.function, ctx.alpha, ctx.freq, ctx.phys)


def _regularity(ctx: SuiteContext, P: EvenPolynomial, s: float):
    f = _rhs(ctx)
    report = regularity_report(f, solve_polynomial(f, P), s, P.degree, P, ctx.tol.regularity)
    return report.ratio, report.bound


def _rerun_gap(ctx: SuiteContext) -> float:
    first = solve_helmholtz(_rhs(ctx), ctx.config.k).values
    second = solve_helmholtz(_rhs(ctx), ctx.config.k).values
    return float(np.max(np.abs(first - second)))


def _rejects_nonpositive(ctx: SuiteContext) -> float:
    try:
        solve_polynomial(_rhs(ctx), EvenPolynomial(coeffs=[-1.0, 1.0]))
    except NonPositivePolynomialError:
        return 1.0
    return 0.0


def checks(ctx: SuiteContext) -> List[SuiteCheck]:
    tol = ctx.tol
    P = EvenPolynomial(coeffs=ctx.config.poly) if ctx.config.poly else DEFAULT_POLYNOMIAL
    label = ctx.function.label()

    out: List[SuiteCheck] = [
        bound_check(
            SUITE, "pde.polynomial_roundtrip", "P(−Δ_α)u = f solved by F_α u = F_α f / P(‖ξ‖²)", tol.roundtrip,
            lambda: (solve_roundtrip_defect(_rhs(ctx), solve_polynomial(_rhs(ctx), P), P), 0.0),
            P=list(P.coeffs), function=label,
        ),
        bound_check(
            SUITE, f"pde.polynomial_regularity[gain={P.degree}]",
            "‖u‖_{H^{s+m}_α} ≤ sup_t (1+t)^m/P(t) ‖f‖_{H^s_α}, m = deg P", tol.regularity,
            lambda: _regularity(ctx, P, ctx.config.s), P=list(P.coeffs), s=ctx.config.s, gain=P.degree,
        ),
        equal_check(
            SUITE, "pde.determinism", "identical input gives identical solution",
            lambda: (_rerun_gap(ctx), 0.0), k=ctx.config.k,
        ),
        equal_check(
            SUITE, "pde.rejects_nonpositive", "P must be strictly positive on [0, ∞)",
            lambda: (_rejects_nonpositive(ctx), 1.0),
        ),
    ]

    for k in HELMHOLTZ_KS:
        out.append(bound_check(
            SUITE, f"pde.helmholtz_roundtrip[k={k:g}]", "(k² − Δ_α)u = f by the multiplier (k²+‖ξ‖²)^{−1}",
            tol.roundtrip,
            lambda k=k: (solve_roundtrip_defect(_rhs(ctx), solve_helmholtz(_rhs(ctx), k), helmholtz_polynomial(k)), 0.0),
            k=k, function=label,
        ))
        for s in REGULARITY_ORDERS:
            out.append(bound_check(
                SUITE, f"pde.helmholtz_regularity[k={k:g},s={s:g}]",
                "‖u‖_{H^{s+1}_α} ≤ sup_t (1+t)/(k²+t) ‖f‖_{H^s_α}", tol.regularity,
                lambda k=k, s=s: _regularity(ctx, helmholtz_polynomial(k), s), k=k, s=s,
            ))
    return out
