import numpy as np
import pytest

from polyaxial.exceptions import (
    AlphaMismatchError,
    DomainError,
    EndpointSingularError,
    NotIntegrableError,
)
from polyaxial.function_specs import constant, gaussian, poly_gaussian
from polyaxial.quadrature import build_grid, sample
from polyaxial.translation import (
    commutativity_defect,
    contraction_defect,
    convolution_theorem_defect,
    convolve,
    convolve_spectral,
    gaussian_convolution_closed_form,
    jacobi_mass,
    kernel_mass_defect,
    modulation_defect,
    product_formula_defect,
    product_transform_defect,
    theta_rule,
    translate,
    translate_kernel_form,
    translation_kernel,
    young_defect,
)


@pytest.fixture(scope="module")
def conv_freq():
    return build_grid((0.0,), 12.0, 100)


class TestThetaRule:

    @pytest.mark.parametrize("a", [0.0, 0.5, 1.0, 2.5])
    def test_normalized_weights_sum_to_one(self, a):
        rule = theta_rule((a,), 32)
        assert rule.weights[0].sum() == pytest.approx(1.0, abs=1e-12)
        assert rule.raw_weights[0].sum() == pytest.approx(jacobi_mass(a), rel=1e-12)

    def test_jacobi_mass_at_zero(self):
        assert jacobi_mass(0.0) == pytest.approx(np.pi)

    def test_node_count(self):
        assert theta_rule((0.0, 1.0), 16).M == (16, 16)
        with pytest.raises(DomainError):
            theta_rule((0.0,), 0)


class TestTranslate:

    def test_zero_shift_is_identity(self, rule0):
        assert translate(gaussian(), [0.0], [1.3], rule0) == pytest.approx(np.exp(-0.5 * 1.69), rel=1e-15)

    def test_at_origin_gives_value_at_shift(self, rule0):
        assert translate(gaussian(), [1.3], [0.0], rule0) == pytest.approx(np.exp(-0.5 * 1.69), rel=1e-12)

    def test_constant_is_fixed(self, rule0):
        assert translate(constant(2.0), [1.0], [2.0], rule0) == pytest.approx(2.0, rel=1e-12)

    def test_symmetric_in_shift_and_point(self, rule0):
        f = poly_gaussian([1.0, 0.5])
        assert translate(f, [0.4], [2.2], rule0) == pytest.approx(translate(f, [2.2], [0.4], rule0), rel=1e-12)

    def test_many_points(self, rule0):
        xs = np.array([[0.5], [1.0], [2.0]])
        many = translate(gaussian(), [1.0], xs, rule0)
        singles = [translate(gaussian(), [1.0], x, rule0) for x in xs]
        np.testing.assert_allclose(many, singles, rtol=1e-14)

    def test_separable_in_two_axes(self):
        joint = translate(gaussian(), [1.0, 2.0], [0.5, 1.5], theta_rule((0.0, 0.5), 16))
        first = translate(gaussian(), [1.0], [0.5], theta_rule((0.0,), 16))
        second = translate(gaussian(), [2.0], [1.5], theta_rule((0.5,), 16))
        assert joint == pytest.approx(first * second, rel=1e-12)

    def test_rejects_negative_shift(self, rule0):
        with pytest.raises(DomainError):
            translate(gaussian(), [-1.0], [1.0], rule0)


class TestKernel:

    def test_symmetric(self):
        x, y, z = [1.1], [1.7], [0.9]
        values = [
            translation_kernel((0.5,), *triple)
            for triple in [(x, y, z), (y, x, z), (z, y, x), (x, z, y)]
        ]
        assert max(values) - min(values) == 0.0

    def test_positive_inside_zero_outside(self):
        assert translation_kernel((0.0,), [1.0], [2.0], [2.5]) > 0
        assert translation_kernel((0.0,), [1.0], [2.0], [3.5]) == 0.0
        assert translation_kernel((0.0,), [1.0], [2.0], [0.5]) == 0.0

    def test_endpoint_singular_for_small_alpha(self):
        with pytest.raises(EndpointSingularError):
            translation_kernel((0.0,), [1.0], [2.0], [3.0])
        assert translation_kernel((1.0,), [1.0], [2.0], [3.0]) == 0.0

    def test_zero_coordinate(self):
        with pytest.raises(DomainError):
            translation_kernel((0.0,), [0.0], [2.0], [2.0])

    @pytest.mark.parametrize("a", [0.0, 0.5, 1.0])
    @pytest.mark.parametrize("x, y", [(1.0, 2.0), (1.0, 1.0), (0.5, 3.0)])
    def test_unit_mass(self, a, x, y):
        assert kernel_mass_defect((a,), [x], [y], 64) < 1e-10

    @pytest.mark.parametrize("x, y", [(1.0, 2.0), (0.7, 0.7), (3.0, 0.5)])
    def test_theta_route_matches_kernel_route(self, rule0, x, y):
        f = poly_gaussian([1.0, 0.5])
        assert translate(f, [y], [x], rule0) == pytest.approx(translate_kernel_form(f, [y], [x], (0.0,), 64), abs=1e-6)

    @pytest.mark.parametrize("a", [0.5, 1.0])
    @pytest.mark.parametrize("x, y", [(1.0, 2.0), (0.7, 0.7), (3.0, 0.5)])
    def test_theta_route_matches_kernel_route_at_positive_alpha(self, a, x, y):
        f = poly_gaussian([1.0, 0.5])
        rule = theta_rule((a,), 64)
        assert translate(f, [y], [x], rule) == pytest.approx(translate_kernel_form(f, [y], [x], (a,), 64), abs=1e-6)

    @pytest.mark.parametrize("tau", [0.5, 1.0, 3.0])
    def test_product_formula(self, rule0, tau):
        assert product_formula_defect((0.0,), [tau], [0.7], [1.3], rule0) < 1e-8


class TestConvolution:

    def test_gaussian_closed_form(self, conv_grid, rule0):
        h = convolve(sample(gaussian(), conv_grid), gaussian(), conv_grid, rule0)
        exact = gaussian_convolution_closed_form(conv_grid.points, (0.0,))
        np.testing.assert_allclose(exact, 0.5 * np.exp(-0.25 * conv_grid.norm_sq))
        assert np.max(np.abs(h.values - exact)) / np.max(exact) < 1e-5

    def test_spectral_route_agrees(self, conv_grid, conv_freq):
        f = sample(gaussian(), conv_grid)
        h = convolve_spectral(f, f, conv_freq)
        exact = gaussian_convolution_closed_form(conv_grid.points, (0.0,))
        assert np.max(np.abs(h.values - exact)) / np.max(exact) < 1e-5

    def test_convolution_theorem(self, conv_grid, conv_freq, rule0):
        assert convolution_theorem_defect(gaussian(), gaussian(scale=2.0), conv_grid, conv_freq, rule0) < 1e-5

    def test_commutative(self, conv_grid, rule0):
        assert commutativity_defect(gaussian(), poly_gaussian([1.0, 0.5]), conv_grid, rule0) < 1e-8

    @pytest.mark.parametrize("p", [1.0, 2.0])
    def test_young(self, conv_grid, rule0, p):
        assert young_defect(gaussian(), gaussian(scale=2.0), conv_grid, p, rule0) <= 1e-8

    @pytest.mark.parametrize("p", [1.0, 2.0, np.inf])
    def test_contraction(self, conv_grid, rule0, p):
        assert contraction_defect(gaussian(), [1.0], conv_grid, p, rule0) <= 1e-8

    def test_modulation(self, conv_grid, conv_freq, rule0):
        assert modulation_defect(gaussian(), [1.0], conv_grid, conv_freq, rule0) < 1e-6

    def test_three_axes_need_the_spectral_route(self):
        grid = build_grid((0.0, 0.0, 0.0), 5.0, 4)
        with pytest.raises(DomainError):
            convolve(sample(gaussian(), grid), gaussian(), grid, theta_rule((0.0, 0.0, 0.0), 4))

    def test_rule_must_match(self, conv_grid):
        with pytest.raises(AlphaMismatchError):
            convolve(sample(gaussian(), conv_grid), gaussian(), conv_grid, theta_rule((0.5,), 8))

    def test_product_transform_needs_integrable_factors(self, conv_grid, conv_freq, rule0):
        with pytest.raises(NotIntegrableError):
            product_transform_defect(constant(1.0), gaussian(), conv_grid, conv_freq, rule0)
