from typing import Dict, List, Optional

from polyaxial.exceptions import ConfigError
from polyaxial.suites import bessel, oracle, pde, sobolev, transform, translation
from polyaxial.suites.base import CheckFactory, SuiteCheck, SuiteContext

SUITES: Dict[str, CheckFactory] = {
    "bessel": bessel.checks,
    "transform": transform.checks,
    "translation": translation.checks,
    "sobolev": sobolev.checks,
    "pde": pde.checks,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def collect(ctx: SuiteContext, suite: str = "all", table: Optional[dict] = None) -> List[SuiteCheck]:
    if suite not in SUITE_NAMES:
        raise ConfigError(f"suite must be one of {', '.join(SUITE_NAMES)}, got {suite!r}")
    names = list(SUITES) if suite == "all" else [suite]
    selected: List[SuiteCheck] = []
    for name in names:
        selected.extend(SUITES[name](ctx))
    if table is not None:
        selected.extend(oracle.checks(ctx, table))
    return selected
