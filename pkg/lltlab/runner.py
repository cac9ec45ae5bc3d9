"""
lltlab - Suite Runner
=====================
Runs the instances of a verification suite, in process or over a worker
pool, and folds the outcomes into a VerifyReport in instance order.

Usage:
    async with SuiteRunner(jobs=4) as runner:
        report = await runner.run(suite, bound, options, progress)
"""

from __future__ import annotations
import asyncio
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Tuple

from .models import Failure, LLTLabError, Outcome, VerifyReport

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[str, int, int], None]


def run_instance(check, payload, options) -> Outcome:
    """Check one instance; library errors become failures instead of aborting the suite"""
    try:
        return check(payload, options)
    except LLTLabError as e:
        logger.warning("instance %r raised %s: %s", payload, type(e).__name__, e)
        return Outcome(failure=Failure(instance=repr(payload), expected="no error", got=f"{type(e).__name__}: {e}"))


class SuiteRunner:
    """Async context manager owning the worker pool for jobs > 1"""

    def __init__(self, jobs: int = 1):
        self.jobs = max(1, int(jobs))
        self.executor: Optional[ProcessPoolExecutor] = None

    async def __aenter__(self):
        if self.jobs > 1:
            self.executor = ProcessPoolExecutor(max_workers=self.jobs)
        return self

    async def __aexit__(self, *args):
        if self.executor:
            self.executor.shutdown(wait=True)
            self.executor = None

    async def _gather(self, check, instances, options, progress: Optional[ProgressCallback]) -> List[Outcome]:
        total = len(instances)
        results: List[Optional[Outcome]] = [None] * total
        if self.executor is None:
            for index, (label, payload) in enumerate(instances):
                results[index] = run_instance(check, payload, options)
                if progress:
                    progress(label, index + 1, total)
                await asyncio.sleep(0)
            return results

        loop = asyncio.get_running_loop()

        async def one(index: int, payload) -> Tuple[int, Outcome]:
            outcome = await loop.run_in_executor(self.executor, run_instance, check, payload, options)
            return index, outcome

        tasks = [one(index, payload) for index, (_, payload) in enumerate(instances)]
        done = 0
        for next_done in asyncio.as_completed(tasks):
            index, outcome = await next_done
            results[index] = outcome
            done += 1
            if progress:
                progress(instances[index][0], done, total)
        return results

    async def run(self, suite, bound: int, options, progress: Optional[ProgressCallback] = None) -> VerifyReport:
        suite.check_bound(bound)
        started = time.monotonic()
        instances = suite.instances(bound, options)
        logger.info("suite %s: %d instances at bound %d (jobs=%d)", suite.name, len(instances), bound, self.jobs)

        outcomes = await self._gather(suite.check, instances, options, progress)

        report = VerifyReport(suite=suite.name, bound=bound, instances=len(instances))
        for (label, _), outcome in zip(instances, outcomes):
            if outcome.failure is not None:
                failure = outcome.failure
                if failure.instance != label:
                    failure = Failure(instance=label, expected=failure.expected, got=failure.got)
                report.failures.append(failure)
            report.notes.extend(outcome.notes)
        report.elapsed = time.monotonic() - started
        logger.info("suite %s: %s in %.2fs", suite.name, "pass" if report.passed else f"{len(report.failures)} failures", report.elapsed)
        return report


def run_suite(suite, bound: int, options, jobs: int = 1, progress: Optional[ProgressCallback] = None) -> VerifyReport:
    async def go():
        async with SuiteRunner(jobs) as runner:
            return await runner.run(suite, bound, options, progress)
    return asyncio.run(go())
