from typing import List

import numpy as np

from polyaxial.function_specs import bump, gaussian
from polyaxial.quadrature import lp_norm, sample
from polyaxial.sobolev import (
    SobolevIndex,
    SpectralDistribution,
    binomial_defect,
    continuity_embedding_check,
    dirac_membership,
    dirac_membership_numeric,
    duality_pairing,
    embedding_threshold,
    extremal_dual,
    hs_inner_product,
    isometry_defect,
    laplacian_power,
    negative_order_binomial,
    negative_order_representation,
    poincare_slope,
    polynomial_regularity_check,
    random_gaussian_mixture_spectra,
    schwartz_multiply_bound,
    seminorm_band,
    sobolev_norm,
)
from polyaxial.spectral_pde import EvenPolynomial
from polyaxial.suites.base import SuiteCheck, SuiteContext, bound_check, equal_check, match_check

SUITE = "sobolev"
ISOMETRY_INDICES = ((0.5, 2.0), (1.0, 1.0), (-1.0, 3.0))
MAPPING_INDICES = ((1.0, 2.0), (0.5, 1.0))
SCHWARTZ_ORDERS = (0.0, 1.0, -1.0)
POINCARE_PAIRS = ((1.0, 0.0), (1.0, 0.5), (2.0, 1.0))
DUALITY_SAMPLES = 100
DUALITY_ORDER = 0.5
BAND_ORDER = 1.0


def _relative(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0 else abs(a - b) / scale


def _duality_excess(ctx: SuiteContext, T_family, phi) -> float:
    worst = -np.inf
    for T in T_family:
        pairing, bound = duality_pairing(T, phi, DUALITY_ORDER)
        worst = max(worst, abs(pairing) - bound)
    return worst


def _extremal_gap(phi: SpectralDistribution) -> float:
    T = extremal_dual(phi, DUALITY_ORDER)
    pairing, bound = duality_pairing(T, phi, DUALITY_ORDER)
    return _relative(pairing, bound)


def _representation_gap(ctx: SuiteContext, m: int) -> float:
    g = sample(gaussian(), ctx.phys)
    T = negative_order_representation(g, m, ctx.freq)
    return _relative(sobolev_norm(T, SobolevIndex(-m, 2.0)), lp_norm(g, 2))


def _representation_binomial_gap(ctx: SuiteContext, m: int) -> float:
    g = sample(gaussian(), ctx.phys)
    direct = negative_order_representation(g, m, ctx.freq).values
    termwise = negative_order_binomial(g, m, ctx.freq).values
    return float(np.max(np.abs(direct - termwise)) / np.max(np.abs(direct)))


def checks(ctx: SuiteContext) -> List[SuiteCheck]:
    tol = ctx.tol
    cfg = ctx.config
    T = SpectralDistribution.from_spec(gaussian(), ctx.alpha, ctx.freq)
    phi = gaussian(scale=2.0)
    s_list = sorted(cfg.s_list)
    x0 = cfg.dirac_x()
    P = EvenPolynomial(coeffs=[4.0, 0.0, 1.0])

    out: List[SuiteCheck] = [
        match_check(
            SUITE, "sobolev.l2_identity", "E^{0,2}_α = L²_α with equal norms", tol.plancherel,
            lambda: (_relative(sobolev_norm(T, SobolevIndex(0.0, 2.0)), lp_norm(sample(gaussian(), ctx.phys), 2)), 0.0),
        ),
        bound_check(
            SUITE, "sobolev.duality_bound", "|⟨T, φ⟩| ≤ ‖φ‖_{H^s_α} ‖T‖_{H^{−s}_α}", tol.duality,
            lambda: (_duality_excess(
                ctx, random_gaussian_mixture_spectra(ctx.alpha, ctx.freq, DUALITY_SAMPLES, cfg.seed), phi,
            ), 0.0),
            s=DUALITY_ORDER, samples=DUALITY_SAMPLES, seed=cfg.seed,
        ),
        bound_check(
            SUITE, "sobolev.duality_extremal", "the duality bound is attained", tol.extremal,
            lambda: (_extremal_gap(SpectralDistribution.from_spec(phi, ctx.alpha, ctx.freq)), 0.0),
            s=DUALITY_ORDER,
        ),
        bound_check(
            SUITE, "sobolev.seminorm_band", "‖T‖_{Ḣ^s_α} ≤ ‖T‖_{H^s_α}", 0.0,
            lambda: (seminorm_band(
                random_gaussian_mixture_spectra(ctx.alpha, ctx.freq, DUALITY_SAMPLES, cfg.seed + 1), BAND_ORDER,
            )[1], 1.0),
            s=BAND_ORDER,
        ),
        equal_check(
            SUITE, "sobolev.polynomial_regularity", "P(−Δ_α)g ∈ E^{s,2}_α implies g ∈ E^{s+m,2}_α",
            lambda: (float(polynomial_regularity_check(T, P, 0.0)), 1.0), P=list(P.coeffs), s=0.0,
        ),
    ]

    norms = [lambda s=s: sobolev_norm(T, SobolevIndex(s, 2.0)) for s in s_list]
    for i in range(len(s_list) - 1):
        out.append(bound_check(
            SUITE, f"sobolev.monotone[s={s_list[i]:g}<{s_list[i + 1]:g}]",
            "‖T‖_{E^{s,p}_α} ≤ ‖T‖_{E^{t,p}_α} for s ≤ t", 0.0,
            lambda i=i: (norms[i](), norms[i + 1]()), s=s_list[i], t=s_list[i + 1],
        ))

    for s, p in ISOMETRY_INDICES:
        idx = SobolevIndex(s, p)
        out.append(bound_check(
            SUITE, f"sobolev.isometry[s={s:g},p={p:g}]", "T ↦ c_α(1+‖ξ‖²)^s F_α T is an isometry onto L^p_α",
            tol.isometry, lambda idx=idx: (isometry_defect(T, idx) / sobolev_norm(T, idx), 0.0), s=s, p=p,
        ))
        out.append(match_check(
            SUITE, f"sobolev.inner_product[s={s:g}]", "⟨T, T⟩_{H^s_α} = ‖T‖²_{H^s_α}", tol.isometry,
            lambda s=s: (_relative(hs_inner_product(T, T, s).real, sobolev_norm(T, SobolevIndex(s, 2.0)) ** 2), 0.0),
            s=s,
        ))

    for s, p in MAPPING_INDICES:
        out.append(bound_check(
            SUITE, f"sobolev.laplacian_mapping[s={s:g},p={p:g}]",
            "‖(−Δ_α)T‖_{E^{s−1,p}_α} ≤ ‖T‖_{E^{s,p}_α}", tol.laplacian_mapping,
            lambda s=s, p=p: (
                sobolev_norm(laplacian_power(T, 1), SobolevIndex(s - 1.0, p)),
                sobolev_norm(T, SobolevIndex(s, p)),
            ),
            s=s, p=p,
        ))

    for m in (1, 2):
        out.append(bound_check(
            SUITE, f"sobolev.binomial[m={m}]", "(1−Δ_α)^m = Σ_k C(m,k)(−Δ_α)^k", tol.binomial,
            lambda m=m: (binomial_defect(T, m), 0.0), m=m,
        ))

    for m in (0, 1, 2):
        out.append(bound_check(
            SUITE, f"sobolev.representation[m={m}]", "‖(1−Δ_α)^m g‖_{H^{−m}_α} = ‖g‖_{L²_α}", tol.representation,
            lambda m=m: (_representation_gap(ctx, m), 0.0), m=m,
        ))
        out.append(bound_check(
            SUITE, f"sobolev.representation_binomial[m={m}]", "(1−Δ_α)^m g = Σ_k C(m,k)(−Δ_α)^k g", tol.binomial,
            lambda m=m: (_representation_binomial_gap(ctx, m), 0.0), m=m,
        ))

    for s, p in cfg.dirac_pairs:
        out.append(equal_check(
            SUITE, f"sobolev.dirac[s={s:g},p={p:g}]",
            "δ_x ∈ E^{s,p}_α iff 2sp + (2−p)(|α| + n/2) < −n",
            lambda s=s, p=p: (
                float(dirac_membership_numeric(s, p, x0, ctx.alpha, ctx.freq)),
                float(dirac_membership(s, p, ctx.alpha)),
            ),
            s=s, p=p, x=list(x0),
        ))

    for s in SCHWARTZ_ORDERS:
        out.append(bound_check(
            SUITE, f"sobolev.schwartz_multiplier[s={s:g}]",
            "‖φT‖_{E^{s,p}_α} ≤ 2^{|s|} c_α ‖T‖_{E^{s,p}_α} ‖(1+‖ξ‖²)^{|s|} F_α φ‖_{L¹_α}", 1e-10,
            lambda s=s: schwartz_multiply_bound(phi, T, SobolevIndex(s, 2.0), ctx.phys), s=s,
        ))

    for m in (0, 1):
        s = embedding_threshold(ctx.alpha, m) + 0.5
        out.append(equal_check(
            SUITE, f"sobolev.continuity_embedding[m={m}]", "H^s_α ⊂ C^m for s > (|α|+n)/2 + m",
            lambda s=s, m=m: (float(continuity_embedding_check(T, s, m)), 1.0), s=s, m=m,
        ))

    poincare_profile = bump()
    pairs = list(POINCARE_PAIRS)
    if cfg.s > cfg.t >= 0 and (cfg.s, cfg.t) not in pairs:
        pairs.append((cfg.s, cfg.t))
    for s, t in pairs:
        out.append(match_check(
            SUITE, f"sobolev.poincare[s={s:g},t={t:g}]", "‖T_ε‖_{H^t_α} ≤ C ε^{2(s−t)} ‖T_ε‖_{H^s_α}",
            tol.poincare_slope,
            lambda s=s, t=t: (poincare_slope(poincare_profile, s, t, cfg.eps_list, ctx.alpha), 2.0 * (s - t)),
            s=s, t=t, eps=list(cfg.eps_list), function=poincare_profile.label(),
        ))
    return out
