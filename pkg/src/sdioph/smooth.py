"""Prime sets, smoothness tests and ordered enumeration of S-smooth integers."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import Duplicate, Empty, NonPositive, NotPrime, UnsupportedPrimeSize

# Deterministic for every n < 3.3e24, so certainly below 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
PRIME_LIMIT = 2**64


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for ``n < 2**64``."""
    if n >= PRIME_LIMIT:
        raise UnsupportedPrimeSize(f"{n} is not below 2**64")
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeSet:
    """The set S of primes, sorted ascending. Build it with :func:`new_prime_set`."""

    primes: tuple[int, ...]

    def __post_init__(self):
        if not self.primes:
            raise Empty("prime set must not be empty")
        if list(self.primes) != sorted(set(self.primes)):
            raise ValueError("primes must be strictly increasing; use new_prime_set")

    @property
    def rank(self) -> int:
        return len(self.primes)

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def issubset(self, other: "PrimeSet") -> bool:
        return set(self.primes) <= set(other.primes)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.primes)) + "}"


def new_prime_set(primes: Iterable[int]) -> PrimeSet:
    primes = [int(p) for p in primes]
    if not primes:
        raise Empty("prime set must not be empty")
    seen = set()
    for p in primes:
        if p in seen:
            raise Duplicate(f"prime {p} repeated")
        seen.add(p)
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
    return PrimeSet(tuple(sorted(primes)))


def _check_positive(n: int) -> None:
    if n < 1:
        raise NonPositive(f"expected a positive integer, got {n}")


def factor_over(n: int, S: PrimeSet) -> tuple[tuple[int, ...], int]:
    """Split ``n`` into its exponent vector over S and the S-free cofactor."""
    _check_positive(n)
    exps = []
    for p in S.primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exps.append(e)
    return tuple(exps), n


def is_smooth(n: int, S: PrimeSet) -> bool:
    return factor_over(n, S)[1] == 1


def s_free_part(n: int, S: PrimeSet) -> int:
    return factor_over(n, S)[1]


def enumerate_smooth(S: PrimeSet, limit: int) -> list[int]:
    """All S-smooth integers in ``[1, limit]`` in increasing order.

    Min-heap merge seeded with 1: each popped value is multiplied by every
    prime and pushed back unless already seen.
    """
    _check_positive(limit)
    out = []
    heap = [1]
    seen = {1}
    while heap:
        v = heapq.heappop(heap)
        out.append(v)
        for p in S.primes:
            w = v * p
            if w > limit:
                # primes are ascending, larger ones only overshoot further
                break
            if w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)
    return out


def exponent_value(exps: Sequence[int], S: PrimeSet) -> Fraction:
    """Exact value of prod p_i**e_i, with negative exponents allowed."""
    if len(exps) != S.rank:
        raise ValueError(f"exponent vector has length {len(exps)}, rank is {S.rank}")
    num, den = 1, 1
    for p, e in zip(S.primes, exps):
        if e >= 0:
            num *= p**e
        else:
            den *= p**-e
    return Fraction(num, den)


@dataclass(frozen=True, order=True)
class SUnitValue:
    """A nonzero rational in the group generated by -1 and S."""

    sign: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def value(self, S: PrimeSet) -> Fraction:
        return self.sign * exponent_value(self.exponents, S)

    @classmethod
    def from_rational(cls, q, S: PrimeSet) -> "SUnitValue | None":
        """Decompose ``q`` over S, or return None if it is zero or not an S-unit."""
        q = Fraction(q)
        if q == 0:
            return None
        sign = 1 if q > 0 else -1
        num_exps, num_rest = factor_over(abs(q.numerator), S)
        den_exps, den_rest = factor_over(q.denominator, S)
        if num_rest != 1 or den_rest != 1:
            return None
        return cls(sign, tuple(a - b for a, b in zip(num_exps, den_exps)))

    def height(self) -> int:
        return max((abs(e) for e in self.exponents), default=0)

    def to_json(self) -> dict:
        return {"sign": self.sign, "exp": list(self.exponents)}
