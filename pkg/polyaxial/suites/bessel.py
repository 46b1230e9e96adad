from typing import List

import numpy as np

from polyaxial.oracle import bessel_series_oracle
from polyaxial.special_functions import bessel_ode_residual, normalized_bessel
from polyaxial.suites.base import SuiteCheck, SuiteContext, bound_check, equal_check, match_check

SUITE = "bessel"
REFERENCE_ORDERS = (-0.5, 0.0, 0.5, 1.0, 2.5)
CLOSED_FORM_POINTS = (0.5, 3.0, 7.0, 20.0)
ODE_POINTS = (0.5, 2.5, 10.0, 15.0)
ODE_STEP = 1e-4
ORACLE_POINTS = (0.5, 3.0, 8.0, 12.5, 19.0)


def _orders(ctx: SuiteContext):
    return sorted(set(REFERENCE_ORDERS) | set(ctx.alpha.alpha))


def checks(ctx: SuiteContext) -> List[SuiteCheck]:
    tol = ctx.tol
    out: List[SuiteCheck] = []

    for g in _orders(ctx):
        out.append(equal_check(
            SUITE, f"bessel.normalization[gamma={g:g}]", "normalized Bessel function: j_γ(0) = 1",
            lambda g=g: (normalized_bessel(g, 0.0), 1.0), gamma=g,
        ))

    for x in CLOSED_FORM_POINTS:
        out.append(match_check(
            SUITE, f"bessel.closed_form.cos[x={x:g}]", "j_{−1/2}(x) = cos x", tol.bessel_closed_form,
            lambda x=x: (normalized_bessel(-0.5, x), np.cos(x)), x=x,
        ))
        out.append(match_check(
            SUITE, f"bessel.closed_form.sinc[x={x:g}]", "j_{1/2}(x) = sin x / x", tol.bessel_closed_form,
            lambda x=x: (normalized_bessel(0.5, x), np.sin(x) / x), x=x,
        ))

    for g in sorted(set(ctx.alpha.alpha) | {0.0}):
        for x in ODE_POINTS:
            out.append(bound_check(
                SUITE, f"bessel.ode[gamma={g:g},x={x:g}]",
                "j_γ solves u″ + ((2γ+1)/x)u′ + u = 0", tol.bessel_ode,
                lambda g=g, x=x: (bessel_ode_residual(g, x, ODE_STEP), 0.0), gamma=g, x=x, h=ODE_STEP,
            ))

    dense = np.linspace(0.0, 50.0, 5001)
    for g in _orders(ctx):
        out.append(bound_check(
            SUITE, f"bessel.bounded[gamma={g:g}]", "|j_γ(x)| ≤ 1 for γ ≥ −1/2", 1e-12,
            lambda g=g: (np.abs(normalized_bessel(g, dense)).max(), 1.0), gamma=g,
        ))

    for g in sorted(set(ctx.alpha.alpha) | {0.0, 0.5}):
        for x in ORACLE_POINTS:
            out.append(match_check(
                SUITE, f"bessel.series_oracle[gamma={g:g},x={x:g}]",
                "j_γ(x) = Γ(γ+1) Σ (−1)^k (x/2)^{2k} / (k! Γ(k+γ+1))", tol.bessel_oracle,
                lambda g=g, x=x: (normalized_bessel(g, x), bessel_series_oracle(g, x)), gamma=g, x=x,
            ))
    return out
