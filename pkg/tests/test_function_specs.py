import numpy as np
import pytest

from polyaxial.exceptions import DomainError
from polyaxial.fourier_bessel import forward
from polyaxial.function_specs import (
    FunctionSpec,
    bump,
    constant,
    exact_moment,
    exact_transform,
    gaussian,
    gaussian_mixture,
    is_integrable,
    poly_gaussian,
    scaled,
    support_radius,
    unit_mass,
)
from polyaxial.quadrature import build_grid, sample


class TestValidation:

    def test_default_is_unit_gaussian(self):
        spec = FunctionSpec()
        assert spec.kind == "gaussian"
        assert spec.evaluate([0.0]) == 1.0

    @pytest.mark.parametrize(
        "raw",
        [
            {"kind": "bump", "params": {"order": 2}},
            {"kind": "gaussian", "params": {"scale": -1}},
            {"kind": "gaussian_mixture", "params": {"weights": [1, 2], "scales": [1]}},
            {"kind": "poly_gaussian", "params": {}},
            {"kind": "sawtooth"},
        ],
    )
    def test_rejects_bad_params(self, raw):
        with pytest.raises(ValueError):
            FunctionSpec.model_validate(raw)

    def test_label(self):
        assert gaussian().label() == "gaussian(amplitude=1.0, scale=1.0)"


class TestEvaluate:

    def test_single_point_gives_float(self):
        value = gaussian().evaluate([1.0])
        assert isinstance(value, float)
        assert value == pytest.approx(np.exp(-0.5))

    def test_bump_support(self):
        values = bump(radius=1.0).evaluate(np.array([[0.5], [1.0], [1.5]]))
        np.testing.assert_allclose(values, [0.75 ** 8, 0.0, 0.0])
        assert support_radius(bump(radius=2.0)) == 2.0
        assert support_radius(gaussian()) is None

    def test_bump_is_a_tensor_product(self):
        b = bump()
        assert b.evaluate([0.5, 0.5]) == pytest.approx(0.75 ** 16)
        assert b.evaluate([0.5, 1.2]) == 0.0

    def test_exp_bump_peak(self):
        spec = FunctionSpec(kind="exp_bump", params={"radius": 2.0})
        assert spec.evaluate([0.0]) == pytest.approx(1.0)
        assert spec.evaluate([2.5]) == 0.0

    def test_mixture_and_constant(self):
        mix = gaussian_mixture([1.0, -0.5], [1.0, 2.0])
        assert mix.evaluate([1.0]) == pytest.approx(np.exp(-0.5) - 0.5 * np.exp(-1.0))
        assert constant(3.0).evaluate([7.0]) == 3.0


class TestExactTransforms:

    def test_poly_gaussian_closed_form(self):
        lam = np.array([[0.0], [1.0], [2.5]])
        values = exact_transform(poly_gaussian([0.0, 1.0]), (0.0,))(lam)
        L = lam[:, 0] ** 2
        np.testing.assert_allclose(values, (2.0 - L) * np.exp(-0.5 * L), rtol=1e-14)

    def test_moment_two_axes(self):
        assert exact_moment(gaussian(), (0.0, 1.0)) == pytest.approx(2.0)

    def test_no_closed_form(self):
        assert exact_transform(bump(), (0.0,)) is None
        assert exact_moment(constant(), (0.0,)) is None

    @pytest.mark.parametrize(
        "spec",
        [gaussian_mixture([1.0, 0.5], [1.0, 2.0]), poly_gaussian([1.0, 0.5]), poly_gaussian([0.0, 0.0, 1.0], scale=2.0)],
    )
    def test_closed_forms_match_quadrature(self, spec):
        grid = build_grid((0.5,), 14.0, 200)
        F = forward(sample(spec, grid), grid)
        exact = exact_transform(spec, (0.5,))(grid.points)
        assert np.max(np.abs(F.values - exact)) / np.max(np.abs(exact)) < 1e-8


class TestFamilyHelpers:

    def test_integrability(self):
        assert is_integrable(gaussian())
        assert is_integrable(constant(0.0))
        assert not is_integrable(constant(1.0))

    @pytest.mark.parametrize("spec", [gaussian(), poly_gaussian([1.0, 0.5]), gaussian_mixture([1.0], [2.0])])
    def test_scaled_profile(self, spec):
        eps = 0.5
        assert scaled(spec, eps).evaluate([0.4]) == pytest.approx(spec.evaluate([0.8]), rel=1e-12)

    def test_scaled_bump_radius(self):
        assert scaled(bump(radius=1.0), 0.25).parsed.radius == 0.25

    def test_scaled_rejects_non_positive(self):
        with pytest.raises(DomainError):
            scaled(gaussian(), 0.0)

    def test_unit_mass(self):
        alpha = (0.0, 1.0)
        normalized = unit_mass(gaussian(), alpha, exact_moment(gaussian(), alpha))
        assert exact_moment(normalized, alpha) == pytest.approx(1.0)
        with pytest.raises(DomainError):
            unit_mass(gaussian(), alpha, 0.0)
