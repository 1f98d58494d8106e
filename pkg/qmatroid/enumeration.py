"""Budget guard and deterministic chunking for exhaustive state-space sums."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Tuple, TypeVar

from .errors import EnumerationBudgetExceeded

DEFAULT_BUDGET = 10**8

logger = logging.getLogger(__name__)

R = TypeVar("R")


def ensure_within_budget(states: int, budget: Optional[int], what: str) -> None:
    """Raise EnumerationBudgetExceeded when `states` is larger than the budget."""
    limit = DEFAULT_BUDGET if budget is None else budget
    if states > limit:
        raise EnumerationBudgetExceeded(
            f"{what}: {states} states exceed the enumeration budget of {limit}"
        )
    logger.debug("%s: enumerating %d states (budget %d)", what, states, limit)


def chunk_bounds(total: int, chunks: int) -> List[Tuple[int, int]]:
    """Split range(total) into at most `chunks` contiguous half-open ranges."""
    if total <= 0:
        return [(0, 0)]
    chunks = max(1, min(chunks, total))
    size = math.ceil(total / chunks)
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def decode_index(index: int, radix: int, length: int) -> Tuple[int, ...]:
    """Digits of `index` in base `radix`, most significant first.

    The order matches itertools.product: the last position varies fastest.
    """
    digits = [0] * length
    for position in range(length - 1, -1, -1):
        index, digits[position] = divmod(index, radix)
    return tuple(digits)


def map_chunks(worker: Callable[..., R], total: int, workers: int, *args) -> List[R]:
    """Evaluate worker(*args, start, stop) over chunks of range(total).

    Results come back in chunk order whatever the worker count, so reductions
    over them are reproducible.
    """
    bounds = chunk_bounds(total, max(1, workers))
    if workers <= 1 or len(bounds) == 1:
        return [worker(*args, start, stop) for start, stop in bounds]

    logger.info("Dispatching %d chunks of %d states to %d workers", len(bounds), total, workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(worker, *args, start, stop) for start, stop in bounds]
        return [future.result() for future in futures]
