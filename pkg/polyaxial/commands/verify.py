import asyncio
import logging
from typing import List, Optional

from polyaxial.commands.reporting import Report
from polyaxial.config import app_conf
from polyaxial.exceptions import NumericalOverflowError
from polyaxial.schemas import CheckRecord, RunConfig
from polyaxial.suites import collect
from polyaxial.suites.base import SuiteCheck, SuiteContext

logger = logging.getLogger(__name__)

COMMAND = "verify"


def _failed_record(check: SuiteCheck, error: Exception) -> CheckRecord:
    parameters = dict(check.parameters)
    parameters["error"] = f"{type(error).__name__}: {str(error)}"
    return CheckRecord(
        check_id=check.check_id,
        suite=check.suite,
        paper_ref=check.paper_ref,
        parameters=parameters,
        lhs=float("nan"),
        rhs=float("nan"),
        tolerance=check.tolerance,
        passed=False,
    )


async def run_checks(checks: List[SuiteCheck], max_workers: Optional[int] = None) -> List[CheckRecord]:
    """Run checks in worker threads; the result is ordered by check_id."""
    semaphore = asyncio.Semaphore(max_workers or app_conf.MAX_WORKERS)

    async def run_one(check: SuiteCheck) -> CheckRecord:
        async with semaphore:
            try:
                record = await asyncio.to_thread(check.run)
            except NumericalOverflowError:
                logger.error(f"Numerical overflow in {check.check_id}")
                raise
            except Exception as e:
                logger.error(f"Check {check.check_id} raised: {str(e)}")
                return _failed_record(check, e)
        if not record.passed:
            logger.warning(f"Check {check.check_id} failed: lhs={record.lhs:.6e}, rhs={record.rhs:.6e}")
        return record

    records = await asyncio.gather(*(run_one(c) for c in checks))
    return sorted(records, key=lambda r: r.check_id)


def run(config: RunConfig, suite: str = "all", table: Optional[dict] = None) -> Report:
    try:
        ctx = SuiteContext(config)
        checks = collect(ctx, suite, table)
        ctx.warm()
        logger.info(f"Running {len(checks)} checks for suite '{suite}' with alpha={ctx.alpha.alpha}")
        records = asyncio.run(run_checks(checks))
        passed = sum(r.passed for r in records)
        logger.info(f"Suite '{suite}' finished: {passed}/{len(records)} checks passed")
        return Report(COMMAND, records, {"suite": suite, "alpha": list(ctx.alpha.alpha)})
    except Exception as e:
        logger.error(f"Verification failed: {str(e)}")
        raise
