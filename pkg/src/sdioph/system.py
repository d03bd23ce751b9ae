"""The six shifted products of a quadruple and the S-unit system they satisfy.

For a < b < c < d put

    s1 = ab+1, s2 = ac+1, s3 = ad+1, s4 = bc+1, s5 = bd+1, s6 = cd+1.

Then s1*s6 - s1 - s6 + 1 = s2*s5 - s2 - s5 + 1 = s3*s4 - s3 - s4 + 1 = abcd,
and the first two expressions give the six-term relation

    y1 - y2 - y3 - y4 + y5 + y6 = 0
    (y1, ..., y6) = (s1*s6, s1, s6, s2*s5, s2, s5).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations
from typing import Sequence

from .errors import NonPositive, NotAQuadruple, SystemUnsatisfied, ZeroCoordinate
from .parallel import map_chunks
from .smooth import PrimeSet, factor_over, is_prime

SIGNS = (1, -1, -1, -1, 1, 1)


class Classification(str, enum.Enum):
    NON_DEGENERATE = "non_degenerate"
    THREE_TERM_CASE_1 = "three_term_case_1"
    THREE_TERM_CASE_2 = "three_term_case_2"
    THREE_TERM_CASE_3 = "three_term_case_3"
    THREE_TERM_CASE_4 = "three_term_case_4"
    OTHER = "other"


# Vanishing triple (1-based y-indices) for each three-term system:
#   1: s1s6 - s5s2 = s1  and  s6 = s5 + s2
#   2: s1s6 - s5s2 = s6  and  s1 = s5 + s2
#   3: s1s6 - s5s2 = -s2 and  s1 + s6 = s5
#   4: s1s6 - s5s2 = -s5 and  s1 + s6 = s2
THREE_TERM_PATTERNS = {
    Classification.THREE_TERM_CASE_1: (1, 2, 4),
    Classification.THREE_TERM_CASE_2: (1, 3, 4),
    Classification.THREE_TERM_CASE_3: (1, 4, 5),
    Classification.THREE_TERM_CASE_4: (1, 4, 6),
}


@dataclass(frozen=True)
class Sextuple:
    s: tuple[int, ...]
    certificates: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if len(self.s) != 6:
            raise ValueError("a sextuple has exactly six entries")

    def __getitem__(self, k: int) -> int:
        """1-based access, so ``sx[1]`` is s1."""
        return self.s[k - 1]

    def to_json(self) -> dict:
        certs = None if self.certificates is None else [list(c) for c in self.certificates]
        return {"s": list(self.s), "certificates": certs}


@dataclass(frozen=True)
class SolutionVector:
    y: tuple[int, ...]

    def signed_terms(self) -> tuple[int, ...]:
        return tuple(sg * v for sg, v in zip(SIGNS, self.y))


@dataclass(frozen=True)
class SubsumReport:
    vanishing_subsets: tuple[tuple[int, ...], ...]
    classification: Classification


@dataclass(frozen=True, order=True)
class CatalanSolution:
    x: int
    y: int
    sign: int
    p: int = 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.sign)


def sextuple_of(q: Sequence[int], S: PrimeSet | None = None) -> Sextuple:
    q = tuple(q)
    if len(q) != 4 or q[0] < 1 or any(x >= y for x, y in zip(q, q[1:])):
        raise NotAQuadruple(f"expected a strictly increasing positive quadruple, got {q}")
    a, b, c, d = q
    s = (a * b + 1, a * c + 1, a * d + 1, b * c + 1, b * d + 1, c * d + 1)
    certs = None
    if S is not None:
        factored = [factor_over(v, S) for v in s]
        if all(rest == 1 for _, rest in factored):
            certs = tuple(e for e, _ in factored)
    return Sextuple(s, certs)


def check_product_identities(sx: Sextuple) -> int | None:
    s1, s2, s3, s4, s5, s6 = sx.s
    p1 = s1 * s6 - s1 - s6 + 1
    p2 = s2 * s5 - s2 - s5 + 1
    p3 = s3 * s4 - s3 - s4 + 1
    return p1 if p1 == p2 == p3 else None


def check_system(sx: Sextuple) -> bool:
    s1, s2, s3, s4, s5, s6 = sx.s
    first = s1 * s6 - s1 - s6 - s2 * s5 + s2 + s5
    second = s1 * s6 - s1 - s6 - s3 * s4 + s3 + s4
    return first == 0 and second == 0


def _first_equation_holds(sx: Sextuple) -> bool:
    s1, s2, _, _, s5, s6 = sx.s
    return s1 * s6 - s1 - s6 - s2 * s5 + s2 + s5 == 0


def solution_vector(sx: Sextuple) -> SolutionVector:
    if not _first_equation_holds(sx):
        raise SystemUnsatisfied(f"{sx.s} does not satisfy s1s6-s1-s6 = s2s5-s2-s5")
    s1, s2, _, _, s5, s6 = sx.s
    return SolutionVector((s1 * s6, s1, s6, s2 * s5, s2, s5))


def vanishing_subsets(terms: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Nonempty proper index sets (1-based) whose terms sum to zero.

    Ordered by size, then lexicographically.
    """
    n = len(terms)
    out = []
    for k in range(1, n):
        for idx in combinations(range(n), k):
            if sum(terms[i] for i in idx) == 0:
                out.append(tuple(i + 1 for i in idx))
    return tuple(out)


def has_vanishing_subsum(terms: Sequence[int]) -> bool:
    """True when some nonempty proper subset of ``terms`` sums to zero."""
    sums = [0]
    for t in terms:
        sums += [v + t for v in sums]
    # index 0 is the empty set, the last index is the full set
    return 0 in sums[1:-1]


def _classify_subsets(subsets: tuple[tuple[int, ...], ...]) -> Classification:
    if not subsets:
        return Classification.NON_DEGENERATE
    found = set(subsets)
    for cls, triple in THREE_TERM_PATTERNS.items():
        complement = tuple(i for i in range(1, 7) if i not in triple)
        if found == {triple, complement}:
            return cls
    return Classification.OTHER


def find_vanishing_subsums(v: SolutionVector) -> SubsumReport:
    subsets = vanishing_subsets(v.signed_terms())
    return SubsumReport(subsets, _classify_subsets(subsets))


def classify_degenerate(sx: Sextuple) -> Classification:
    return find_vanishing_subsums(solution_vector(sx)).classification


def _exact_sqrt(q: Fraction) -> int | None:
    if q.denominator != 1 or q.numerator < 1:
        return None
    r = math.isqrt(q.numerator)
    return r if r * r == q.numerator else None


def recover_quadruple(sx: Sextuple) -> tuple[int, int, int, int] | None:
    """Invert :func:`sextuple_of`, or None if ``sx`` comes from no quadruple."""
    s1, s2, s3, s4, s5, s6 = sx.s
    if min(sx.s) < 2:
        return None
    u1, u2, u4, u5, u6 = s1 - 1, s2 - 1, s4 - 1, s5 - 1, s6 - 1
    roots = [
        _exact_sqrt(Fraction(u1 * u2, u4)),
        _exact_sqrt(Fraction(u1 * u4, u2)),
        _exact_sqrt(Fraction(u2 * u4, u1)),
        _exact_sqrt(Fraction(u5 * u6, u4)),
    ]
    if any(r is None for r in roots):
        return None
    q = tuple(roots)
    if any(x >= y for x, y in zip(q, q[1:])):
        return None
    # the d formula ignores s3, so only a full round trip certifies the result
    if sextuple_of(q).s != sx.s:
        return None
    return q


def normalize_projective(v: Sequence) -> tuple[Fraction, ...]:
    v = [Fraction(x) for x in v]
    if any(x == 0 for x in v):
        raise ZeroCoordinate("projective coordinates must be nonzero")
    return tuple(x / v[0] for x in v)


def positivity_witness(sx: Sextuple) -> int:
    """Right-hand side a = s1*s6 - s1 - s6 of s3*s4 - s3 - s4 = a; always positive."""
    s1, s6 = sx[1], sx[6]
    if s1 < 3:
        raise NonPositive(f"s1 must be at least 3, got {s1}")
    a = s1 * s6 - s1 - s6
    if a <= 0:
        raise NonPositive(f"s1*s6 - s1 - s6 = {a} is not positive")
    return a


def _check_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")


def _catalan_chunk(xs: Sequence[int], p: int, max_exp: int) -> list[CatalanSolution]:
    out = []
    for x in xs:
        two = 1 << x
        pw = p
        for y in range(1, max_exp + 1):
            diff = two - pw
            if diff in (1, -1):
                out.append(CatalanSolution(x, y, diff, p))
            if pw > two + 1:
                break
            pw *= p
    return out


def catalan_scan(p: int, max_exp: int, partitions: int = 1) -> list[CatalanSolution]:
    """All 2**x - p**y = +-1 with 1 <= x, y <= max_exp, sorted by (x, y)."""
    _check_odd_prime(p)
    if max_exp < 1:
        raise ValueError("max_exp must be >= 1")
    limit = p**max_exp + 1
    xs = [x for x in range(1, max_exp + 1) if (1 << x) - 1 <= limit]
    parts = map_chunks(partial(_catalan_chunk, p=p, max_exp=max_exp), xs, partitions)
    return sorted(s for part in parts for s in part)


def equation4_scan(p: int, max_exp: int) -> list[tuple[int, int, int, int, int, int]]:
    """All solutions of 2^a6 p^b6 = 2^a5 p^b5 + 2^a2 p^b2 with summand exponents in [0, max_exp].

    Tuples are (a6, b6, a5, b5, a2, b2), sorted. The left-hand exponents are
    determined by the sum, so they are not capped: 8 = 1 + 7 is reported for
    max_exp = 1.
    """
    _check_odd_prime(p)
    if max_exp < 0:
        raise ValueError("max_exp must be >= 0")
    rng = range(max_exp + 1)
    terms = [((1 << a) * p**b, a, b) for a in rng for b in rng]
    S = PrimeSet((2, p))
    out = []
    for v5, a5, b5 in terms:
        for v2, a2, b2 in terms:
            (a6, b6), rest = factor_over(v5 + v2, S)
            if rest == 1:
                out.append((a6, b6, a5, b5, a2, b2))
    return sorted(out)
