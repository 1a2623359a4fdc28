# /src/core/parallel.py

"""Order-preserving job execution across worker processes."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

JobT = TypeVar("JobT")
ResultT = TypeVar("ResultT")


def run_jobs(
    fn: Callable[[JobT], ResultT], jobs: Sequence[JobT], workers: int = 1
) -> List[ResultT]:
    """
    Apply `fn` to every job, returning results in job order.

    Args:
        fn: Module-level (picklable) function
        jobs: Independent job descriptions
        workers: Process count; 1 runs in-process

    Returns:
        Results aligned with `jobs`, independent of scheduling
    """
    if workers <= 1 or len(jobs) <= 1:
        return [fn(job) for job in jobs]
    workers = min(workers, len(jobs))
    logger.info("running %d jobs on %d workers", len(jobs), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))
