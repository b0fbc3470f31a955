"""Run registered checks and assemble the report."""

import math
import time
import warnings
import zlib

import numpy as np

from src.shared.errors import CheckSkipped, QHarmonicError
from src.shared.logging import get_logger
from src.verify.registry import CheckContext, RegisteredCheck, checks_for
from src.verify.schemas import CheckResult, RunConfig, Suite, VerificationReport


logger = get_logger(__name__)


def check_rng(seed: int, name: str) -> np.random.Generator:
    """Generator that depends only on the run seed and the check name."""
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


def run_check(registered: RegisteredCheck, config: RunConfig) -> CheckResult:
    """Run one check; errors and non-finite residuals count as failures."""
    tol = max(registered.tol, config.rel_tol)
    context = CheckContext(ctx=config.context(), gamma=config.gamma, rng=check_rng(config.seed, registered.name))
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            residual = float(registered.func(context))
    except CheckSkipped as e:
        return CheckResult(name=registered.name, residual=None, tol=tol, status="skip", reason=str(e))
    except (QHarmonicError, ArithmeticError, ValueError) as e:
        logger.warning("check_errored", check=registered.name, error=str(e), error_type=type(e).__name__)
        reason = f"{type(e).__name__}: {e}"
        return CheckResult(name=registered.name, residual=None, tol=tol, status="fail", reason=reason)
    if not math.isfinite(residual):
        return CheckResult(name=registered.name, residual=None, tol=tol, status="fail", reason="non-finite residual")
    status = "pass" if residual <= tol else "fail"
    return CheckResult(name=registered.name, residual=residual, tol=tol, status=status)


def run_suite(suite: Suite | None, config: RunConfig) -> VerificationReport:
    """Run the checks of one suite, or of every suite when ``suite`` is None, in name order."""
    start_time = time.perf_counter()
    selected = checks_for(suite)
    logger.info("verify_started", suite=suite or "all", checks=len(selected), q=config.q, m=config.m)
    results = []
    for registered in selected:
        check_start = time.perf_counter()
        result = run_check(registered, config)
        logger.debug(
            "check_completed",
            check=registered.name,
            status=result.status,
            residual=result.residual,
            duration_ms=(time.perf_counter() - check_start) * 1000,
        )
        results.append(result)
    report = VerificationReport.from_results(config, results)
    logger.info(
        "verify_completed",
        suite=suite or "all",
        passed=report.summary.passed,
        failed=report.summary.failed,
        skipped=report.summary.skipped,
        duration_ms=(time.perf_counter() - start_time) * 1000,
    )
    return report
