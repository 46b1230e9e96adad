from itertools import permutations
from typing import List

import numpy as np

from polyaxial.exceptions import NotIntegrableError
from polyaxial.function_specs import constant, gaussian, poly_gaussian
from polyaxial.quadrature import build_grid, sample
from polyaxial.suites.base import (
    CONVOLUTION_NODES_2D,
    CONVOLUTION_RADIUS_2D,
    SuiteCheck,
    SuiteContext,
    bound_check,
    equal_check,
)
from polyaxial.translation import (
    commutativity_defect,
    contraction_defect,
    convolution_theorem_defect,
    convolve,
    gaussian_convolution_closed_form,
    kernel_mass_defect,
    product_formula_defect,
    product_transform_defect,
    translate,
    translate_kernel_form,
    translation_kernel,
    young_defect,
)

SUITE = "translation"
KERNEL_SAMPLES = 1000
SYMMETRY_SAMPLES = 200
MASS_PAIRS = ((1.0, 2.0), (1.0, 1.0), (0.5, 3.0), (2.0, 0.7))
PRODUCT_TAUS = (0.5, 1.0, 3.0)


def _triples(ctx: SuiteContext, count: int):
    rng = np.random.default_rng(ctx.config.seed)
    return rng.uniform(0.05, 3.0, size=(count, 3, ctx.n))


def _negative_kernel_count(ctx: SuiteContext) -> int:
    return sum(translation_kernel(ctx.alpha, x, y, z) < 0 for x, y, z in _triples(ctx, KERNEL_SAMPLES))


def _outside_support_count(ctx: SuiteContext) -> int:
    rng = np.random.default_rng(ctx.config.seed + 1)
    nonzero = 0
    for x, y, z in _triples(ctx, KERNEL_SAMPLES):
        axis = int(rng.integers(ctx.n))
        z = z.copy()
        z[axis] = x[axis] + y[axis] + rng.uniform(0.01, 1.0)
        nonzero += translation_kernel(ctx.alpha, x, y, z) != 0
    return nonzero


def _symmetry_gap(ctx: SuiteContext) -> float:
    gap = 0.0
    for triple in _triples(ctx, SYMMETRY_SAMPLES):
        values = [translation_kernel(ctx.alpha, *perm) for perm in permutations(triple)]
        gap = max(gap, max(values) - min(values))
    return gap


def _closed_form_gap(ctx: SuiteContext) -> float:
    grid = ctx.conv_grid
    h = convolve(sample(gaussian(), grid), gaussian(), grid, ctx.rule)
    exact = gaussian_convolution_closed_form(grid.points, ctx.alpha)
    return float(np.max(np.abs(h.values - exact)) / np.max(np.abs(exact)))


def _rejects_constant(ctx: SuiteContext, freq) -> float:
    try:
        product_transform_defect(constant(1.0), gaussian(), ctx.conv_grid, freq, ctx.rule)
    except NotIntegrableError:
        return 1.0
    return 0.0


def checks(ctx: SuiteContext) -> List[SuiteCheck]:
    tol = ctx.tol
    n = ctx.n
    f, g = gaussian(), gaussian(scale=2.0)
    h = poly_gaussian([1.0, 0.5])
    grid = ctx.conv_grid
    freq = ctx.freq if n == 1 else build_grid(ctx.alpha, CONVOLUTION_RADIUS_2D, CONVOLUTION_NODES_2D)
    M = ctx.config.theta_nodes

    out: List[SuiteCheck] = [
        equal_check(
            SUITE, "translation.kernel_positive", "w_α(x, y, z) ≥ 0",
            lambda: (_negative_kernel_count(ctx), 0), samples=KERNEL_SAMPLES, seed=ctx.config.seed,
        ),
        equal_check(
            SUITE, "translation.kernel_support", "supp w_α(x, y, ·) ⊂ ∏ [|x_i−y_i|, x_i+y_i]",
            lambda: (_outside_support_count(ctx), 0), samples=KERNEL_SAMPLES,
        ),
        equal_check(
            SUITE, "translation.kernel_symmetry", "w_α symmetric in (x, y, z)",
            lambda: (_symmetry_gap(ctx), 0.0), samples=SYMMETRY_SAMPLES,
        ),
        bound_check(
            SUITE, "translation.gaussian_closed_form",
            "e^{−‖·‖²/2} ∗_α e^{−‖·‖²/2} = 2^{−(|α|+n)} c_α^{−1} e^{−‖x‖²/4}", tol.convolution_theorem,
            lambda: (_closed_form_gap(ctx), 0.0),
        ),
        bound_check(
            SUITE, "translation.convolution_theorem", "F_α(f ∗_α g) = F_α f · F_α g", tol.convolution_theorem,
            lambda: (convolution_theorem_defect(f, g, grid, freq, ctx.rule), 0.0),
        ),
        bound_check(
            SUITE, "translation.product_transform", "F_α(fg) = c_α² F_α f ∗_α F_α g", tol.product_transform,
            lambda: (product_transform_defect(f, f, grid, freq, ctx.rule), 0.0),
        ),
        equal_check(
            SUITE, "translation.product_transform_rejects", "F_α(fg) needs f, g ∈ L¹_α",
            lambda: (_rejects_constant(ctx, freq), 1.0),
        ),
        bound_check(
            SUITE, "translation.commutativity", "f ∗_α g = g ∗_α f", tol.contraction,
            lambda: (commutativity_defect(f, h, grid, ctx.rule), 0.0),
        ),
    ]

    for xv, yv in MASS_PAIRS:
        x, y = [xv] * n, [yv] * n
        out.append(bound_check(
            SUITE, f"translation.kernel_mass[x={xv:g},y={yv:g}]", "∫ w_α(x, y, z) dμ_α(z) = 1", tol.kernel_mass,
            lambda x=x, y=y: (kernel_mass_defect(ctx.alpha, x, y, M), 0.0), x=x, y=y, M=M,
        ))
        out.append(bound_check(
            SUITE, f"translation.theta_vs_kernel[x={xv:g},y={yv:g}]",
            "T_y f(x) = ∫ w_α(x, y, z) f(z) dμ_α(z)", tol.theta_vs_kernel,
            lambda x=x, y=y: (abs(translate(h, y, x, ctx.rule) - translate_kernel_form(h, y, x, ctx.alpha, M)), 0.0),
            x=x, y=y,
        ))

    for tau in PRODUCT_TAUS:
        out.append(bound_check(
            SUITE, f"translation.product_formula[tau={tau:g}]",
            "T_y j_α(τ·)(x) = j_α(τx) j_α(τy)", tol.product_formula,
            lambda tau=tau: (product_formula_defect(ctx.alpha, [tau] * n, [0.7] * n, [1.3] * n, ctx.rule), 0.0),
            tau=tau,
        ))

    for p in (1.0, 2.0, np.inf):
        out.append(bound_check(
            SUITE, f"translation.contraction[p={p:g}]", "‖T_x f‖_{L^p_α} ≤ ‖f‖_{L^p_α}", tol.contraction,
            lambda p=p: (contraction_defect(f, [1.0] * n, grid, p, ctx.rule), 0.0), p=str(p),
        ))
    for p in (1.0, 2.0):
        out.append(bound_check(
            SUITE, f"translation.young[p={p:g}]", "‖f ∗_α g‖_{L^p_α} ≤ ‖f‖_{L^p_α} ‖g‖_{L¹_α}", tol.contraction,
            lambda p=p: (young_defect(f, g, grid, p, ctx.rule), 0.0), p=p,
        ))
    return out
