"""Exact and log-domain evaluation of the bounds A(n, r), B(n, r).

Values are carried as :class:`BoundValue`: an exact integer when its decimal
length is within a digit budget, and always a natural log held as a
``Decimal`` at 60 significant digits. Logs of exact integers are taken from
the leading 256 bits plus a binary shift, never through float exponentials.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from decimal import ROUND_CEILING, Context, Decimal, localcontext
from functools import lru_cache

from .errors import DigitBudgetExceeded

DEFAULT_DIGIT_BUDGET = 10**6
PREC = 60
_CTX = Context(prec=PREC)
LN2 = _CTX.ln(Decimal(2))

# Constants printed alongside the bounds, kept for comparison only.
PAPER_A3 = (Decimal("2069"), Decimal("518.8"))
PAPER_A5 = (Decimal("25329"), Decimal("4616.3"))
PAPER_COROLLARY = (Decimal("27398"), Decimal("5126"))
PAPER_REMARK = (Decimal("73801"), Decimal("15378"))


def ln_int(n: int) -> Decimal:
    """Natural log of a positive integer to about 60 significant digits."""
    if n < 1:
        raise ValueError("ln_int needs a positive integer")
    shift = max(0, n.bit_length() - 256)
    top = n >> shift
    with localcontext(_CTX):
        return Decimal(top).ln() + shift * LN2


def digit_count(n: int) -> int:
    """Number of decimal digits of a positive integer, without str()."""
    d = max(1, int(n.bit_length() * 0.30102999566398120) - 1)
    while 10**d <= n:
        d += 1
    return d


def int_to_str(n: int) -> str:
    getter = getattr(sys, "get_int_max_str_digits", None)
    if getter is None:
        return str(n)
    old = getter()
    sys.set_int_max_str_digits(0)
    try:
        return str(n)
    finally:
        sys.set_int_max_str_digits(old)


@dataclass(frozen=True)
class BoundValue:
    log_e: Decimal
    exact: int | None = field(default=None, compare=False)

    @classmethod
    def of(cls, n: int) -> "BoundValue":
        return cls(ln_int(n), n)

    @classmethod
    def power(cls, base: int, exp: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> "BoundValue":
        if exp * math.log10(base) <= digit_budget:
            return cls.of(base**exp)
        with localcontext(_CTX):
            return cls(exp * ln_int(base))

    def _combine_exact(self, other, op, digit_budget):
        if self.exact is None or other.exact is None:
            return None
        value = op(self.exact, other.exact)
        return value if digit_count(value) <= digit_budget else None

    def mul(self, other: "BoundValue", digit_budget: int = DEFAULT_DIGIT_BUDGET) -> "BoundValue":
        exact = self._combine_exact(other, lambda a, b: a * b, digit_budget)
        if exact is not None:
            return BoundValue.of(exact)
        with localcontext(_CTX):
            return BoundValue(self.log_e + other.log_e)

    def add(self, other: "BoundValue", digit_budget: int = DEFAULT_DIGIT_BUDGET) -> "BoundValue":
        exact = self._combine_exact(other, lambda a, b: a + b, digit_budget)
        if exact is not None:
            return BoundValue.of(exact)
        hi, lo = max(self.log_e, other.log_e), min(self.log_e, other.log_e)
        with localcontext(_CTX):
            return BoundValue(hi + (1 + (lo - hi).exp()).ln())

    __mul__ = mul
    __add__ = add

    @property
    def has_exact(self) -> bool:
        return self.exact is not None

    def require_exact(self) -> int:
        if self.exact is None:
            raise DigitBudgetExceeded("exact value suppressed by the digit budget")
        return self.exact

    def digits(self) -> int:
        if self.exact is not None:
            return digit_count(self.exact)
        return int(self.log_e / Decimal(10).ln(_CTX)) + 1

    def to_json(self, with_exact: bool = True) -> dict:
        exact = int_to_str(self.exact) if (with_exact and self.exact is not None) else None
        return {"exact": exact, "log_e": float(self.log_e), "digits": self.digits()}


def _check_rank(r: int) -> None:
    if r < 1:
        raise ValueError(f"rank must be >= 1, got {r}")


def _check_terms(n: int) -> None:
    if n < 2:
        raise ValueError(f"term count must be >= 2, got {n}")


def a2(r: int) -> BoundValue:
    """Bound for two-term equations: 3 * 7**(3 + 2r)."""
    _check_rank(r)
    return BoundValue.of(3 * 7 ** (3 + 2 * r))


def b(n: int, r: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> BoundValue:
    """(8n)**(6 n^3 (n + r))."""
    _check_terms(n)
    _check_rank(r)
    return BoundValue.power(8 * n, 6 * n**3 * (n + r), digit_budget)


def a_direct(n: int, r: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> BoundValue:
    """(8n)**(4 n^4 (n + r + 1))."""
    _check_terms(n)
    _check_rank(r)
    return BoundValue.power(8 * n, 4 * n**4 * (n + r + 1), digit_budget)


@lru_cache(maxsize=None)
def a_recursive(n: int, r: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> BoundValue:
    """A(n, r) via A(n, r) <= 2^n A(n-1, r) B(n, r+1), starting from a2.

    For n = 3 this is 8 * 3 * 7**(3+2r) * 24**(162 (4+r)).
    """
    _check_terms(n)
    _check_rank(r)
    if n == 2:
        return a2(r)
    step = BoundValue.of(2**n).mul(b(n, r + 1, digit_budget), digit_budget)
    return a_recursive(n - 1, r, digit_budget).mul(step, digit_budget)


def theorem_bound(r: int, special: bool = False, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> BoundValue:
    """Bound on the number of quadruples from the recursive A values.

    General: (A(5,r) + A(2,r)^2) A(3,r). ``special`` selects A(5,r) A(3,r),
    which applies when r = 2 or 2 is not in S.
    """
    _check_rank(r)
    a5 = a_recursive(5, r, digit_budget)
    a3 = a_recursive(3, r, digit_budget)
    if special:
        return a5.mul(a3, digit_budget)
    a2sq = a2(r).mul(a2(r), digit_budget)
    return a5.add(a2sq, digit_budget).mul(a3, digit_budget)


def remark_direct_bound(r: int, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> BoundValue:
    """(A(5,r) + A(2,r)^2) A(3,r) with the closed form A used directly."""
    _check_rank(r)
    a2sq = a2(r).mul(a2(r), digit_budget)
    return a_direct(5, r, digit_budget).add(a2sq, digit_budget).mul(a_direct(3, r, digit_budget), digit_budget)


def ceil_tenth(x: Decimal) -> Decimal:
    return x.quantize(Decimal("0.1"), rounding=ROUND_CEILING)


@dataclass(frozen=True)
class CorollaryFit:
    intercept: Decimal
    slope: Decimal
    r_max: int
    slopes: tuple[Decimal, ...]
    paper: tuple[Decimal, Decimal] = PAPER_COROLLARY

    @property
    def slope_gap(self) -> Decimal:
        return self.slope - self.paper[1]

    @property
    def matches_paper(self) -> bool:
        return self.intercept <= self.paper[0] and abs(self.slope_gap) < 1

    def to_json(self) -> dict:
        return {
            "fitted": [float(self.intercept), float(self.slope)],
            "paper": [float(self.paper[0]), float(self.paper[1])],
            "slope_gap": float(self.slope_gap),
            "matches_paper": self.matches_paper,
            "note": None if self.matches_paper else
                "recomputed slope differs from the printed corollary slope",
            "r_max": self.r_max,
        }


def fitted_corollary_constants(r_max: int = 10, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> CorollaryFit:
    """Least c0 + c1 r (both rounded up to 0.1) above ln theorem_bound(r) for 1 <= r <= r_max."""
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    logs = [theorem_bound(r, False, digit_budget).log_e for r in range(1, r_max + 1)]
    c0, c1 = _linear_majorant(logs)
    return CorollaryFit(c0, c1, r_max, tuple(hi - lo for lo, hi in zip(logs, logs[1:])))


def _linear_majorant(logs: list[Decimal]) -> tuple[Decimal, Decimal]:
    # logs[i] belongs to r = i + 1
    c1 = ceil_tenth(max(hi - lo for lo, hi in zip(logs, logs[1:])))
    c0 = ceil_tenth(logs[0] - c1)
    while any(lg > c0 + c1 * r for r, lg in enumerate(logs, start=1)):
        c0 += Decimal("0.1")
    return c0, c1


def remark_fit(r_max: int = 10, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> tuple[Decimal, Decimal]:
    """Same fit as the corollary, applied to :func:`remark_direct_bound`."""
    if r_max < 2:
        raise ValueError("r_max must be >= 2")
    return _linear_majorant([remark_direct_bound(r, digit_budget).log_e for r in range(1, r_max + 1)])


def _majorant(pair: tuple[Decimal, Decimal], r: int) -> Decimal:
    return pair[0] + pair[1] * r


def bound_report(r: int, r_max: int = 10, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> dict:
    """Every bound for rank r as a JSON-ready dict."""
    _check_rank(r)
    a3 = a_recursive(3, r, digit_budget)
    a5 = a_recursive(5, r, digit_budget)
    general = theorem_bound(r, False, digit_budget)
    special = theorem_bound(r, True, digit_budget)
    remark = remark_direct_bound(r, digit_budget)
    fit = fitted_corollary_constants(max(r_max, 2), digit_budget)
    checks = {}
    for name, value, pair in (("a3", a3, PAPER_A3), ("a5", a5, PAPER_A5)):
        m = _majorant(pair, r)
        checks[name] = {"majorant": float(m), "log_e": float(value.log_e),
                        "slack": float(m - value.log_e), "holds": value.log_e <= m}
    return {
        "r": r,
        "a2": a2(r).to_json(),
        "a3_recursive": a3.to_json(),
        "a5_recursive": a5.to_json(),
        "theorem_general": general.to_json(),
        "theorem_special": special.to_json(),
        "majorant_checks": checks,
        "corollary": {
            **fit.to_json(),
            "fitted_log_at_r": float(fit.intercept + fit.slope * r),
            "paper_log_at_r": float(_majorant(PAPER_COROLLARY, r)),
            "paper_majorizes_at_r": general.log_e <= _majorant(PAPER_COROLLARY, r),
        },
        "remark": {
            "direct": remark.to_json(with_exact=False),
            "paper": [float(PAPER_REMARK[0]), float(PAPER_REMARK[1])],
            "paper_log_at_r": float(_majorant(PAPER_REMARK, r)),
            "fitted": [float(c) for c in remark_fit(max(r_max, 2), digit_budget)],
        },
    }
