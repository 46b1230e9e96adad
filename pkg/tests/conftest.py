import json

import pytest

from polyaxial.quadrature import build_grid
from polyaxial.translation import theta_rule


# ===========================
# Reference grids
# ===========================

@pytest.fixture(scope="session")
def ref_grid():
    """α = (0,), N = 200, R = 14."""
    return build_grid((0.0,), 14.0, 200)


@pytest.fixture(scope="session")
def ref_freq():
    return build_grid((0.0,), 14.0, 200)


@pytest.fixture(scope="session")
def conv_grid():
    return build_grid((0.0,), 12.0, 100)


@pytest.fixture(scope="session")
def rule0():
    return theta_rule((0.0,), 64)


@pytest.fixture
def write_config(tmp_path):
    """Write a RunConfig dict to a JSON file and return its path."""
    def _write(doc, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)
    return _write
