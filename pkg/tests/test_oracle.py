import numpy as np
import pytest

from polyaxial.function_specs import constant, gaussian
from polyaxial.oracle import (
    BESSEL_ORDERS,
    BESSEL_POINTS,
    bessel_series_oracle,
    high_resolution_translate,
    load_table,
    pointwise_transform,
    regenerate_table,
)
from polyaxial.quadrature import sample
from polyaxial.schemas import parse_config
from polyaxial.special_functions import normalized_bessel
from polyaxial.suites import oracle as oracle_suite
from polyaxial.suites.base import SuiteContext

SMALL_CONFIG = {"alpha": [0], "grid": {"radius": [8], "nodes": [80]}, "theta_nodes": 8}


@pytest.fixture(scope="module")
def table_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("oracle") / "table.json"
    return regenerate_table(parse_config(SMALL_CONFIG), str(path))


class TestSeriesOracle:

    @pytest.mark.parametrize("x", [0.5, 3.0, 17.0])
    def test_cosine(self, x):
        assert bessel_series_oracle(-0.5, x) == pytest.approx(np.cos(x), abs=1e-14)

    @pytest.mark.parametrize("gamma", BESSEL_ORDERS)
    def test_agrees_with_fast_path(self, gamma):
        for x in BESSEL_POINTS:
            assert normalized_bessel(gamma, x) == pytest.approx(bessel_series_oracle(gamma, x), abs=1e-10)


class TestHighResolution:

    def test_translate_of_constant(self):
        assert high_resolution_translate(constant(1.0), [1.0], [2.0], (0.0,), 8) == pytest.approx(1.0, abs=1e-12)

    def test_pointwise_transform(self, ref_grid):
        f = sample(gaussian(), ref_grid)
        plain = pointwise_transform(f, [1.0])
        assert plain == pytest.approx(np.exp(-0.5), rel=1e-8)
        assert pointwise_transform(f, [1.0], compensated=True) == pytest.approx(plain, rel=1e-13)


class TestTable:

    def test_written_and_loaded(self, table_path):
        table = load_table(table_path)
        assert table["alpha"] == [0.0]
        assert table["radius"] == [8.0]
        assert "generated_at" in table
        kinds = {e["kind"] for e in table["entries"]}
        assert kinds == {"bessel", "transform", "translate"}
        assert len({e["check_id"] for e in table["entries"]}) == len(table["entries"])

    def test_missing_table(self, tmp_path):
        assert load_table(str(tmp_path / "none.json")) is None

    def test_suite_passes_against_table(self, table_path):
        ctx = SuiteContext(parse_config(SMALL_CONFIG))
        checks = oracle_suite.checks(ctx, load_table(table_path))
        records = [c.run() for c in checks]
        assert len(records) == len(load_table(table_path)["entries"])
        assert all(r.passed for r in records), [r.check_id for r in records if not r.passed]

    def test_other_alpha_contributes_nothing(self, table_path):
        ctx = SuiteContext(parse_config({**SMALL_CONFIG, "alpha": [0.5]}))
        assert oracle_suite.checks(ctx, load_table(table_path)) == []
