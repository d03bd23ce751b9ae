"""Height-bounded exhaustive solving of S-unit equations.

The window is a box: every variable has each exponent in [-H, H] (or [0, H]
for the positive homogeneous search). Counting non-degenerate solutions in
growing windows gives desk-scale lower estimates of the quantities A(n, r).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import product
from typing import Sequence

from .parallel import check_budget, map_chunks
from .smooth import PrimeSet, SUnitValue, exponent_value
from .system import has_vanishing_subsum, normalize_projective

MIN_TERMS, MAX_TERMS = 2, 6


@dataclass(frozen=True)
class UnitEquation:
    """a1*x1 + ... + an*xn = 1 with the x_i in the group generated by -1 and S."""

    coefficients: tuple[Fraction, ...]
    prime_set: PrimeSet

    def __post_init__(self):
        coeffs = tuple(Fraction(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not MIN_TERMS <= len(coeffs) <= MAX_TERMS:
            raise ValueError(f"term count must be in [{MIN_TERMS}, {MAX_TERMS}]")
        if any(a == 0 for a in coeffs):
            raise ValueError("coefficients must be nonzero")

    @property
    def n(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True, order=True)
class SolutionRecord:
    values: tuple[SUnitValue, ...]
    degenerate: bool

    def rationals(self, S: PrimeSet) -> tuple[Fraction, ...]:
        return tuple(x.value(S) for x in self.values)

    def to_json(self) -> dict:
        return {"x": [x.to_json() for x in self.values], "degenerate": self.degenerate}


@dataclass(frozen=True)
class ProjectiveSolution:
    coords: tuple[Fraction, ...]
    representative: tuple[int, ...]
    degenerate: bool

    def to_json(self) -> dict:
        return {
            "y": list(self.representative),
            "normalized": [str(c) for c in self.coords],
            "degenerate": self.degenerate,
        }


def exponent_box(rank: int, H: int, lo: int | None = None) -> list[tuple[int, ...]]:
    lo = -H if lo is None else lo
    return list(product(range(lo, H + 1), repeat=rank))


def unit_window(S: PrimeSet, H: int) -> list[SUnitValue]:
    """Every signed S-unit with all exponents in [-H, H], in canonical order."""
    if H < 0:
        raise ValueError("height must be non-negative")
    box = exponent_box(S.rank, H)
    return sorted(SUnitValue(sg, e) for sg in (-1, 1) for e in box)


def affine_grid_size(eq: UnitEquation, H: int) -> int:
    return (2 * (2 * H + 1) ** eq.prime_set.rank) ** (eq.n - 1)


def _solve_chunk(first: Sequence[SUnitValue], eq: UnitEquation, H: int) -> list[SolutionRecord]:
    S = eq.prime_set
    window = unit_window(S, H)
    lookup = {u.value(S): u for u in window}
    vals = [(u, u.value(S)) for u in window]
    coeffs = eq.coefficients
    last = coeffs[-1]
    out = []
    for x1 in first:
        head = coeffs[0] * x1.value(S)
        for rest in product(vals, repeat=eq.n - 2):
            total = head + sum(a * v for a, (_, v) in zip(coeffs[1:], rest))
            xn = lookup.get((1 - total) / last)
            if xn is None:
                continue
            xs = (x1,) + tuple(u for u, _ in rest) + (xn,)
            terms = [a * x.value(S) for a, x in zip(coeffs, xs)]
            out.append(SolutionRecord(xs, has_vanishing_subsum(terms)))
    return out


def solve_affine(
    eq: UnitEquation, H: int, budget: int | None = None, partitions: int = 1
) -> list[SolutionRecord]:
    """All solutions of ``eq`` with every exponent of every variable in [-H, H].

    x1..x_{n-1} run over the window and xn is solved for exactly, then kept
    only if it lies in the window too. Raises BudgetExceeded when the grid is
    larger than the budget.
    """
    check_budget(affine_grid_size(eq, H), budget)
    first = unit_window(eq.prime_set, H)
    parts = map_chunks(partial(_solve_chunk, eq=eq, H=H), first, partitions)
    return sorted(r for part in parts for r in part)


def count_nondegenerate(eq: UnitEquation, H: int, budget: int | None = None) -> int:
    return sum(not r.degenerate for r in solve_affine(eq, H, budget))


def solution_counts(eq: UnitEquation, H: int, budget: int | None = None) -> dict:
    """Totals over the window, including non-degenerate solutions with all x_i > 0."""
    records = solve_affine(eq, H, budget)
    nondeg = [r for r in records if not r.degenerate]
    return {
        "total": len(records),
        "nondegenerate": len(nondeg),
        "nondegenerate_positive": sum(all(x.sign == 1 for x in r.values) for r in nondeg),
    }


def solve_homogeneous_projective(
    n: int, signs: Sequence[int], S: PrimeSet, H: int, budget: int | None = None
) -> list[ProjectiveSolution]:
    """Projective classes of sum(sign_i * y_i) = 0 with y_i positive S-smooth.

    Each y_i has every exponent in [0, H]. Classes come back ordered by their
    primitive integer representative. Meet in the middle: signed partial
    sums of the last terms are hashed, then the first terms are enumerated
    against that table.
    """
    if n < 3:
        raise ValueError("need at least three terms")
    signs = tuple(signs)
    if len(signs) != n or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be n entries of +1/-1")
    if H < 0:
        raise ValueError("height must be non-negative")
    values = sorted(int(exponent_value(e, S)) for e in exponent_box(S.rank, H, lo=0))
    k = n // 2
    check_budget(len(values) ** k + len(values) ** (n - k), budget)

    table: dict[int, list[tuple[int, ...]]] = {}
    for right in product(values, repeat=n - k):
        total = sum(sg * v for sg, v in zip(signs[k:], right))
        table.setdefault(total, []).append(right)

    # a class is identified by its primitive integer representative
    classes = set()
    for left in product(values, repeat=k):
        total = sum(sg * v for sg, v in zip(signs[:k], left))
        for right in table.get(-total, ()):
            y = left + right
            g = math.gcd(*y)
            classes.add(tuple(v // g for v in y) if g > 1 else y)

    out = []
    for rep in sorted(classes):
        coords = normalize_projective(rep)
        degenerate = has_vanishing_subsum([sg * v for sg, v in zip(signs, rep)])
        out.append(ProjectiveSolution(coords, rep, degenerate))
    return out
