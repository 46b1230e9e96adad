import pytest

from polyaxial.commands import verify
from polyaxial.exceptions import ConfigError, NumericalOverflowError
from polyaxial.schemas import parse_config
from polyaxial.suites import SUITE_NAMES, collect
from polyaxial.suites.base import SuiteContext, bound_check, cite, equal_check, match_check, property_refs


def _boom(error):
    def evaluate():
        raise error
    return evaluate


class TestSuiteCheck:

    def test_modes(self):
        assert bound_check("t", "b", "", 1e-3, lambda: (1.0005, 1.0)).run().passed
        assert not bound_check("t", "b", "", 1e-3, lambda: (1.1, 1.0)).run().passed
        assert match_check("t", "m", "", 1e-3, lambda: (0.9995, 1.0)).run().passed
        assert not match_check("t", "m", "", 1e-3, lambda: (0.9, 1.0)).run().passed
        assert equal_check("t", "e", "", lambda: (1, 1)).run().passed
        assert not equal_check("t", "e", "", lambda: (1, 0)).run().passed

    def test_non_finite_fails(self):
        assert not bound_check("t", "b", "", 1.0, lambda: (float("nan"), 0.0)).run().passed

    def test_parameters_are_recorded(self):
        record = bound_check("t", "b", "ref", 0.1, lambda: (0.0, 0.0), s=1.0).run()
        assert record.parameters == {"s": 1.0}
        assert record.paper_ref == "ref"

    def test_known_family_carries_its_location(self):
        check = bound_check("transform", "transform.sup_bound[gaussian]", "‖F_α f‖_∞ ≤ ‖f‖_{L¹_α}", 0.0, lambda: (0.0, 0.0))
        assert check.paper_ref == "Prop p1 item 1, ‖F_α f‖_∞ ≤ ‖f‖_{L¹_α}"
        assert check.run().paper_ref == check.paper_ref

    @pytest.mark.parametrize("check_id", ["oracle.bessel[gamma=0,x=1]", "sobolev.seminorm_band", "pde.helmholtz_regularity[k=1,s=0]"])
    def test_cite_uses_family_before_brackets(self, check_id):
        assert cite(check_id, "f").endswith(", f")
        assert cite(check_id, "f") != "f"


class TestRunChecks:

    @pytest.mark.asyncio
    async def test_sorted_by_id(self):
        checks = [bound_check("t", cid, "", 0.0, lambda: (0.0, 0.0)) for cid in ("t.c", "t.a", "t.b")]
        records = await verify.run_checks(checks, max_workers=2)
        assert [r.check_id for r in records] == ["t.a", "t.b", "t.c"]

    @pytest.mark.asyncio
    async def test_exception_becomes_failed_record(self):
        checks = [bound_check("t", "t.bad", "", 0.0, _boom(ValueError("no good")))]
        (record,) = await verify.run_checks(checks)
        assert not record.passed
        assert record.parameters["error"] == "ValueError: no good"

    @pytest.mark.asyncio
    async def test_overflow_propagates(self):
        checks = [bound_check("t", "t.big", "", 0.0, _boom(NumericalOverflowError("too big")))]
        with pytest.raises(NumericalOverflowError):
            await verify.run_checks(checks)


class TestSuites:

    def test_unknown_suite(self):
        ctx = SuiteContext(parse_config({"alpha": [0]}))
        with pytest.raises(ConfigError):
            collect(ctx, "fourier")

    def test_names(self):
        assert set(SUITE_NAMES) == {"bessel", "transform", "translation", "sobolev", "pde", "all"}

    def test_check_ids_unique(self):
        ctx = SuiteContext(parse_config({"alpha": [0]}))
        ids = [c.check_id for c in collect(ctx, "all")]
        assert len(ids) == len(set(ids))
        assert len(ids) >= 25

    def test_every_record_names_where_its_property_is_stated(self):
        ctx = SuiteContext(parse_config({"alpha": [0]}))
        refs = property_refs()
        for check in collect(ctx, "all"):
            family = check.check_id.split("[", 1)[0]
            assert family in refs, check.check_id
            assert check.paper_ref.startswith(refs[family] + ", ")

    @pytest.mark.parametrize("suite", ["bessel", "pde"])
    def test_fast_suites_pass(self, suite):
        report = verify.run(parse_config({"alpha": [0]}), suite)
        assert report.records
        assert report.passed, [r.check_id for r in report.failures]
        assert report.extras == {"suite": suite, "alpha": [0.0]}

    @pytest.mark.parametrize("poly, gain", [(None, 2), ([1.0, 0.0, 0.0, 1.0], 3), ([2.0, 1.0], 1)])
    def test_pde_regularity_follows_the_configured_polynomial(self, poly, gain):
        doc = {"alpha": [0]} if poly is None else {"alpha": [0], "poly": poly}
        report = verify.run(parse_config(doc), "pde")
        (record,) = [r for r in report.records if r.check_id.startswith("pde.polynomial_regularity")]
        assert record.check_id == f"pde.polynomial_regularity[gain={gain}]"
        assert record.parameters["gain"] == gain
        assert record.passed

    def test_bessel_suite_with_half_order(self):
        report = verify.run(parse_config({"alpha": [1.5], "grid": {"radius": [10], "nodes": [60]}}), "bessel")
        assert report.passed
        assert any(r.check_id == "bessel.ode[gamma=1.5,x=10]" for r in report.records)

    @pytest.mark.slow
    def test_everything_passes_at_the_reference_configuration(self):
        report = verify.run(parse_config({"alpha": [0]}), "all")
        assert len(report.records) >= 25
        assert report.passed, [r.check_id for r in report.failures]
