"""Harmonic analysis for the poly-axial Laplacian Δ_α on the positive orthant."""
from polyaxial.exceptions import PolyaxialError
from polyaxial.fourier_bessel import SpectralSamples, forward, inverse
from polyaxial.function_specs import FunctionSpec
from polyaxial.quadrature import AlphaParams, QuadGrid, SampledFunction, build_grid, sample
from polyaxial.sobolev import SobolevIndex, SpectralDistribution, sobolev_norm
from polyaxial.special_functions import normalized_bessel
from polyaxial.spectral_pde import EvenPolynomial, solve_helmholtz
from polyaxial.translation import convolve, theta_rule, translate

__version__ = "0.1.0"

__all__ = [
    "AlphaParams",
    "EvenPolynomial",
    "FunctionSpec",
    "PolyaxialError",
    "QuadGrid",
    "SampledFunction",
    "SobolevIndex",
    "SpectralDistribution",
    "SpectralSamples",
    "build_grid",
    "convolve",
    "forward",
    "inverse",
    "normalized_bessel",
    "sample",
    "sobolev_norm",
    "solve_helmholtz",
    "theta_rule",
    "translate",
]
