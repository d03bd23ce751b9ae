"""Deterministic work splitting and search budgets.

Work is cut into contiguous chunks and results are concatenated in chunk
order, so the output never depends on how many partitions were used.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

from .errors import BudgetExceeded

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_BUDGET = 10**9
BUDGET_ENV = "SDIOPH_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument wins, then ``$SDIOPH_BUDGET``, then the default."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_BUDGET


def check_budget(required: int, budget: int | None = None, what: str = "grid points") -> None:
    limit = resolve_budget(budget)
    if required > limit:
        raise BudgetExceeded(required, limit, what)


def split_contiguous(items: Sequence[T], partitions: int) -> list[Sequence[T]]:
    """Split ``items`` into at most ``partitions`` contiguous, near-equal chunks."""
    if partitions < 1:
        raise ValueError("partitions must be >= 1")
    n = len(items)
    k = min(partitions, n) or 1
    q, rem = divmod(n, k)
    chunks = []
    start = 0
    for i in range(k):
        stop = start + q + (1 if i < rem else 0)
        chunks.append(items[start:stop])
        start = stop
    return chunks


def map_chunks(func: Callable[[Sequence[T]], R], items: Sequence[T], partitions: int = 1) -> list[R]:
    """Apply ``func`` to each contiguous chunk, returning results in chunk order.

    With more than one partition the chunks run in worker processes, so ``func``
    must be a picklable module-level callable (``functools.partial`` is fine).
    """
    chunks = split_contiguous(items, partitions)
    if len(chunks) <= 1:
        return [func(c) for c in chunks]
    workers = min(len(chunks), os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, chunks))
