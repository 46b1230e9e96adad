import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyaxial.exceptions import AlphaMismatchError, DomainError, NumericalOverflowError
from polyaxial.fourier_bessel import (
    SpectralSamples,
    apply_multiplier,
    dirac_spectrum,
    dual_pairing_defect,
    eigenrelation_defect,
    forward,
    inverse,
    inversion_defect,
    kernel_matrices,
    plancherel_defect,
    spectral_from_json,
    sup_bound_defect,
    sup_bound_excess,
)
from polyaxial.function_specs import bump, exact_transform, gaussian, poly_gaussian
from polyaxial.quadrature import build_grid, lp_norm, sample
from polyaxial.special_functions import bessel_kernel

ONE_AXIS = [(0.0,), (0.5,), (2.0,)]


@pytest.fixture(scope="module", params=ONE_AXIS, ids=lambda a: f"alpha={a[0]:g}")
def grid(request):
    return build_grid(request.param, 14.0, 200)


@pytest.fixture(scope="module")
def grid2():
    return build_grid((0.0, 1.0), 14.0, 100)


class TestGaussianPair:

    def test_one_axis(self, grid):
        F = forward(sample(gaussian(), grid), grid)
        window = grid.points[:, 0] <= 5.0
        exact = exact_transform(gaussian(), grid.alpha)(grid.points[window])
        assert np.max(np.abs(F.values[window] - exact) / np.abs(exact)) < 1e-8

    def test_two_axes(self, grid2):
        F = forward(sample(gaussian(), grid2), grid2)
        window = np.all(grid2.points <= 4.0, axis=1)
        exact = exact_transform(gaussian(), grid2.alpha)(grid2.points[window])
        assert np.max(np.abs(F.values[window] - exact) / np.abs(exact)) < 1e-8


class TestIdentities:

    @pytest.mark.parametrize("spec", [gaussian(), poly_gaussian([1.0, 0.5])], ids=["gaussian", "poly_gaussian"])
    def test_inversion_and_plancherel(self, grid, spec):
        f = sample(spec, grid)
        km = kernel_matrices(grid, grid)
        assert inversion_defect(f, grid, km) < 1e-6
        assert plancherel_defect(f, grid, km) < 1e-6

    def test_inversion_two_axes(self, grid2):
        assert inversion_defect(sample(gaussian(), grid2), grid2) < 1e-6

    def test_plancherel_of_a_bump(self, ref_freq):
        phys = build_grid((0.0,), 1.0, 200)
        assert plancherel_defect(sample(bump(), phys), ref_freq) < 1e-4

    def test_sup_bound(self, grid):
        assert sup_bound_defect(sample(gaussian(), grid), grid) <= 1e-10

    def test_sup_bound_for_an_oscillatory_profile(self, grid):
        f = sample(lambda pts: np.exp(-0.5 * pts[:, 0] ** 2) * np.cos(5.0 * pts[:, 0]), grid)
        assert sup_bound_defect(f, grid) <= 1e-10 * lp_norm(f, 1)

    def test_sup_bound_of_zero(self, ref_grid):
        assert sup_bound_defect(sample(lambda pts: 0.0, ref_grid), ref_grid) == 0.0
        assert sup_bound_excess(sample(lambda pts: 0.0, ref_grid), ref_grid) == 0.0

    @pytest.mark.parametrize("amplitude", [1e-6, 1.0, 1e8])
    def test_sup_bound_excess_is_relative_to_the_l1_mass(self, ref_grid, ref_freq, amplitude):
        f = sample(gaussian(amplitude=amplitude), ref_grid)
        excess = sup_bound_excess(f, ref_freq)
        assert excess == sup_bound_defect(f, ref_freq) / lp_norm(f, 1)
        assert excess <= 1e-10

    def test_eigenrelation(self, ref_grid, ref_freq):
        assert eigenrelation_defect(gaussian(), ref_grid, ref_freq) < 1e-4

    def test_dual_pairing(self, ref_grid):
        f = sample(gaussian(), ref_grid)
        g = sample(poly_gaussian([1.0, 0.5]), ref_grid)
        assert dual_pairing_defect(f, g) < 1e-10

    def test_zero_function_plancherel_undefined(self, ref_grid):
        with pytest.raises(DomainError):
            plancherel_defect(sample(lambda pts: 0.0, ref_grid), ref_grid)


class TestTransformPlumbing:

    def test_alpha_mismatch(self, ref_grid):
        with pytest.raises(AlphaMismatchError):
            forward(sample(gaussian(), ref_grid), build_grid((0.5,), 14.0, 200))

    def test_kernels_reused_only_for_matching_grids(self, ref_grid, ref_freq):
        other = build_grid((0.0,), 10.0, 50)
        km = kernel_matrices(ref_grid, ref_freq)
        assert km.matches(ref_grid, ref_freq)
        assert not km.matches(other, ref_freq)
        f = sample(gaussian(), other)
        F = forward(f, ref_freq, km)
        assert F.grid is ref_freq
        # a stale kernel set is rebuilt for the grid the input lives on
        np.testing.assert_array_equal(F.values, forward(f, ref_freq, kernel_matrices(other, ref_freq)).values)
        np.testing.assert_array_equal(F.values, forward(f, ref_freq).values)

    def test_inverse_lands_on_physical_grid(self, ref_grid):
        coarse = build_grid((0.0,), 14.0, 120)
        F = forward(sample(gaussian(), ref_grid), ref_grid)
        back = inverse(F, coarse)
        np.testing.assert_allclose(back.values, gaussian().evaluate(coarse.points), atol=1e-8)

    def test_truncated_input_warns(self, caplog):
        short = build_grid((0.0,), 3.0, 60)
        with caplog.at_level(logging.WARNING):
            forward(sample(gaussian(), short), short)
        assert "transform input not negligible" in caplog.text


class TestMultipliers:

    def test_constant_and_callable(self, ref_grid):
        F = forward(sample(gaussian(), ref_grid), ref_grid)
        np.testing.assert_array_equal(apply_multiplier(F, 2.0).values, 2.0 * F.values)
        scaled = apply_multiplier(F, lambda pts: 1.0 + pts[:, 0] ** 2)
        np.testing.assert_allclose(scaled.values, (1.0 + ref_grid.norm_sq) * F.values)

    def test_non_finite_multiplier(self, ref_grid):
        F = forward(sample(gaussian(), ref_grid), ref_grid)
        with pytest.raises(DomainError):
            apply_multiplier(F, lambda pts: 1.0 / (pts[:, 0] - pts[0, 0]))


class TestSpectralSamples:

    def test_overflow(self, ref_grid):
        with pytest.raises(NumericalOverflowError):
            SpectralSamples(ref_grid, np.full(ref_grid.size, np.inf))

    def test_closed_form_sampling(self, ref_grid):
        exact = exact_transform(gaussian(), ref_grid.alpha)
        S = SpectralSamples.from_function(exact, ref_grid)
        np.testing.assert_allclose(S.values, np.exp(-0.5 * ref_grid.norm_sq))

    def test_json_tagged_as_frequency(self, ref_grid):
        F = forward(sample(gaussian(), ref_grid), ref_grid)
        doc = F.to_json()
        assert doc["domain"] == "frequency"
        np.testing.assert_array_equal(spectral_from_json(doc).values, F.values)

    def test_physical_snapshot_is_refused(self, ref_grid):
        with pytest.raises(DomainError):
            spectral_from_json(sample(gaussian(), ref_grid).to_json())


class TestDirac:

    def test_half_order_is_sinc(self):
        freq = build_grid((0.5,), 14.0, 50)
        xi = freq.points[:, 0]
        np.testing.assert_allclose(dirac_spectrum([2.0], freq).values, np.sin(2.0 * xi) / (2.0 * xi), rtol=1e-12)

    def test_bounded_by_one(self, grid2):
        assert np.abs(dirac_spectrum([1.0, 0.3], grid2).values).max() <= 1.0 + 1e-12

    @pytest.mark.parametrize("x", [[1.0, 0.3], [2.5, 4.0]])
    def test_samples_are_the_bessel_kernel(self, grid2, x):
        values = dirac_spectrum(x, grid2).values
        expected = np.array([bessel_kernel((0.0, 1.0), xi, x) for xi in grid2.points])
        np.testing.assert_allclose(values, expected, rtol=1e-13, atol=1e-15)


@settings(max_examples=25, deadline=None)
@given(
    a=st.floats(min_value=-5.0, max_value=5.0, allow_nan=False),
    b=st.floats(min_value=-5.0, max_value=5.0, allow_nan=False),
)
def test_forward_is_linear(ref_grid, ref_freq, a, b):
    f = sample(gaussian(), ref_grid)
    g = sample(poly_gaussian([0.0, 1.0]), ref_grid)
    km = kernel_matrices(ref_grid, ref_freq)
    combined = forward(f.with_values(a * f.values + b * g.values), ref_freq, km).values
    separate = a * forward(f, ref_freq, km).values + b * forward(g, ref_freq, km).values
    np.testing.assert_allclose(combined, separate, atol=1e-12 * (1 + abs(a) + abs(b)))
