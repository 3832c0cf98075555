"""
Worker pool for the classification searches.

A search branch is a module-level function ``fn(r, outer_value)`` returning
the coefficient tuples it found for one value of its outermost loop. The
outer values are dealt round-robin into slices, each slice runs in a worker
process, and the hits are merged. Workers only receive plain data and build
their own cached field context.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Sequence, Tuple

logger = logging.getLogger(__name__)

Hit = Tuple[int, ...]
BranchFn = Callable[[int, int], List[Hit]]


def _run_slice(job: Tuple[BranchFn, int, Tuple[int, ...]]) -> List[Hit]:
    """
    Run one branch over a slice of its outer loop.

    Args:
        job (Tuple[BranchFn, int, Tuple[int, ...]]): Branch function, r, outer values

    Returns:
        List[Hit]: Hits of the slice
    """
    fn, r, outer = job
    hits = []
    for value in outer:
        hits.extend(fn(r, value))
    return hits


def partition(values: Sequence[int], parts: int) -> List[Tuple[int, ...]]:
    """Deal values round-robin into at most ``parts`` non-empty slices."""
    parts = max(1, min(parts, len(values)))
    return [tuple(values[i::parts]) for i in range(parts)]


def run_partitioned(fn: BranchFn, r: int, outer_values: Sequence[int], threads: int = 1) -> List[Hit]:
    """
    Run a search branch over all outer values, in parallel when ``threads`` > 1.

    Args:
        fn (BranchFn): Module-level branch function
        r (int): Extension degree
        outer_values (Sequence[int]): Values of the outermost coefficient loop
        threads (int): Worker processes; 1 runs inline

    Returns:
        List[Hit]: Merged hits in no particular order
    """
    if threads <= 1 or len(outer_values) <= 1:
        return _run_slice((fn, r, tuple(outer_values)))

    slices = partition(outer_values, threads)
    logger.info(f"Running {fn.__name__} for r = {r} on {len(slices)} workers")
    try:
        with ProcessPoolExecutor(max_workers=len(slices)) as executor:
            results = executor.map(_run_slice, [(fn, r, part) for part in slices])
            merged = [hit for part in results for hit in part]
    except Exception as e:
        logger.error(f"Search worker for {fn.__name__} failed: {str(e)}", exc_info=True)
        raise
    return merged
