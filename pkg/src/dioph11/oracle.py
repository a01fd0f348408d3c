"""Exhaustive search for x^2 + p^(2k) = y^n at desk scale.

The search is independent of the proof pipeline in :mod:`dioph11.solver` and
is the ground truth it is checked against. The x-range is cut into disjoint
chunks that share nothing; results are merged and sorted, so the output does
not depend on how the range was split or how many workers ran.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .ntheory import DomainError
from .scan import scan_offsets
from .solver import SolutionTuple

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBounds:
    x_max: int
    k_max: int
    n_max: int
    base_prime: int = 11

    def __post_init__(self) -> None:
        if min(self.x_max, self.k_max, self.n_max, self.base_prime) < 1:
            raise DomainError(f"all bounds must be >= 1: {self}")
        if self.n_max < 3:
            raise DomainError(f"n_max must be >= 3, got {self.n_max}")


def split_range(lo: int, hi: int, chunks: int) -> list[tuple[int, int]]:
    """Cut ``[lo, hi)`` into ``chunks`` contiguous, disjoint, nearly equal pieces."""
    if chunks < 1:
        raise DomainError(f"chunks must be >= 1, got {chunks}")
    size = hi - lo
    if size <= 0:
        return []
    chunks = min(chunks, size)
    step, extra = divmod(size, chunks)
    out = []
    start = lo
    for i in range(chunks):
        end = start + step + (1 if i < extra else 0)
        out.append((start, end))
        start = end
    return out


def _search_chunk(args: tuple[int, int, int, int, int, Optional[str]]) -> list[tuple[int, int, int, int]]:
    x_lo, x_hi, p, k_max, n_max, backend = args
    found = []
    for k in range(1, k_max + 1):
        for x, y, n in scan_offsets(x_lo, x_hi, p ** (2 * k), 3, n_max, backend=backend):
            found.append((x, y, k, n))
    return found


def brute_force_search(b: SearchBounds, jobs: int = 1, chunks: Optional[int] = None,
                       backend: Optional[str] = None,
                       progress: Optional[Callable[[int, int], None]] = None) -> list[SolutionTuple]:
    """Every ``(x, y, k, n)`` with ``1 <= x <= x_max``, ``1 <= k <= k_max``,
    ``3 <= n <= n_max`` and ``x^2 + p^(2k) = y^n``, in ascending order.

    ``chunks`` defaults to ``jobs``. ``progress(done, total)`` is called after
    each chunk completes.
    """
    if jobs < 1:
        raise DomainError(f"jobs must be >= 1, got {jobs}")
    pieces = split_range(1, b.x_max + 1, chunks or jobs)
    tasks = [(lo, hi, b.base_prime, b.k_max, b.n_max, backend) for lo, hi in pieces]
    results: list[tuple[int, int, int, int]] = []
    if jobs == 1:
        for i, task in enumerate(tasks, 1):
            results.extend(_search_chunk(task))
            if progress:
                progress(i, len(tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, part in enumerate(pool.map(_search_chunk, tasks), 1):
                results.extend(part)
                if progress:
                    progress(i, len(tasks))
    log.debug("search %s: %d hits over %d chunks", b, len(results), len(tasks))
    return [SolutionTuple(x, y, k, n) for x, y, k, n in sorted(results)]


def lebesgue_spot_check(x_max: int, n_max: int, backend: Optional[str] = None) -> bool:
    """True iff no ``x^2 + 1 = y^n`` with ``1 <= x <= x_max`` and ``3 <= n <= n_max``."""
    if x_max < 1 or n_max < 3:
        return True
    return not scan_offsets(1, x_max + 1, 1, 3, n_max, backend=backend)
