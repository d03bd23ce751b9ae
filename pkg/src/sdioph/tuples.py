"""Bounded exhaustive search for S-Diophantine m-tuples.

The fast path builds the compatibility graph smooth-first (enumerate S-smooth
``s <= N**2 + 1`` and split ``s - 1`` into divisor pairs) and then lists
cliques of size m. :func:`brute_force_tuples` is the independent oracle: it
never touches the smooth enumeration and tests every pair by factoring
``a*b + 1`` directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BudgetExceeded
from .parallel import map_chunks, resolve_budget
from .smooth import PrimeSet, enumerate_smooth, is_smooth

Tuple = tuple[int, ...]

MAX_TUPLE_SIZE = 6
# s - 1 <= N**2 is trial-divided, so keep N modest.
MAX_ELEMENT = 10**6


@dataclass(frozen=True)
class SearchConfig:
    prime_set: PrimeSet
    max_element: int
    tuple_size: int
    partitions: int = 1

    def __post_init__(self):
        if self.tuple_size < 2 or self.tuple_size > MAX_TUPLE_SIZE:
            raise ValueError(f"tuple size must be in [2, {MAX_TUPLE_SIZE}]")
        if self.max_element < 1:
            raise ValueError("max element must be positive")
        if self.max_element > MAX_ELEMENT:
            raise ValueError(f"max element above configured ceiling {MAX_ELEMENT}")
        if self.partitions < 1:
            raise ValueError("partitions must be >= 1")


@dataclass
class CompatibilityGraph:
    bound: int
    edges: set[tuple[int, int]] = field(default_factory=set)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for a, b in self.edges:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        return adj

    def __contains__(self, pair) -> bool:
        a, b = pair
        return (min(a, b), max(a, b)) in self.edges


def is_valid_tuple(t: Sequence[int]) -> bool:
    return len(t) >= 2 and t[0] >= 1 and all(x < y for x, y in zip(t, t[1:]))


def is_s_diophantine(t: Sequence[int], S: PrimeSet) -> bool:
    return all(is_smooth(a * b + 1, S) for a, b in combinations(t, 2))


def _divisor_pairs(smooth_values: Sequence[int], bound: int) -> list[tuple[int, int]]:
    # a*b = s - 1 with a < b <= bound forces (s-1)/bound <= a < sqrt(s-1)
    out = []
    for s in smooth_values:
        m = s - 1
        lo = max(1, -(-m // bound))
        hi = math.isqrt(m)
        for a in range(lo, hi + 1):
            if m % a == 0:
                b = m // a
                if a < b:
                    out.append((a, b))
    return out


def build_edges(S: PrimeSet, N: int, partitions: int = 1) -> CompatibilityGraph:
    """Graph on [1, N] with an edge {a, b} whenever ab + 1 is S-smooth."""
    if N < 2:
        return CompatibilityGraph(N)
    smooth = [s for s in enumerate_smooth(S, N * N + 1) if s >= 3]
    chunks = map_chunks(partial(_divisor_pairs, bound=N), smooth, partitions)
    edges = set()
    for chunk in chunks:
        edges.update(chunk)
    return CompatibilityGraph(N, edges)


def iter_cliques(adj: dict[int, set[int]], m: int) -> Iterator[Tuple]:
    """Cliques of size m in lexicographic order, each grown by larger vertices only."""

    def extend(prefix: list[int], candidates: list[int]):
        if len(prefix) == m:
            yield tuple(prefix)
            return
        need = m - len(prefix)
        for i, v in enumerate(candidates):
            if len(candidates) - i < need:
                break
            nbrs = adj[v]
            rest = [w for w in candidates[i + 1 :] if w in nbrs]
            prefix.append(v)
            yield from extend(prefix, rest)
            prefix.pop()

    for v in sorted(adj):
        higher = sorted(w for w in adj[v] if w > v)
        if len(higher) >= m - 1:
            yield from extend([v], higher)


def find_tuples(cfg: SearchConfig) -> list[Tuple]:
    graph = build_edges(cfg.prime_set, cfg.max_element, cfg.partitions)
    return list(iter_cliques(graph.adjacency(), cfg.tuple_size))


def brute_force_tuples(cfg: SearchConfig, budget: int | None = None, prune: bool = True) -> list[Tuple]:
    """Oracle for :func:`find_tuples` by direct pair testing over [1, N].

    With ``prune=False`` every m-subset is tested in full and the budget caps
    C(N, m). With pruning (the default) subsets are walked depth-first in
    lexicographic order and a prefix is abandoned as soon as one of its pairs
    fails, which is exhaustive because the property is hereditary; the budget
    then caps the number of smoothness tests performed.
    """
    S, N, m = cfg.prime_set, cfg.max_element, cfg.tuple_size
    limit = resolve_budget(budget)
    if not prune:
        total = math.comb(N, m)
        if total > limit:
            raise BudgetExceeded(total, limit, "candidate subsets")
        return [t for t in combinations(range(1, N + 1), m) if is_s_diophantine(t, S)]

    tests = 0
    out = []

    def extend(prefix: list[int]):
        nonlocal tests
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        start = prefix[-1] + 1 if prefix else 1
        for v in range(start, N + 1):
            ok = True
            for a in prefix:
                tests += 1
                if not is_smooth(a * v + 1, S):
                    ok = False
                    break
            if tests > limit:
                raise BudgetExceeded(tests, limit, "smoothness tests")
            if ok:
                prefix.append(v)
                extend(prefix)
                prefix.pop()

    extend([])
    return out


def tuple_record(S: PrimeSet, m: int, n_max: int, t: Sequence[int]) -> dict:
    return {"s": list(S.primes), "m": m, "n_max": n_max, "tuple": list(t)}
