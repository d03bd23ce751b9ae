import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import prime_factors, smooth_sieve
from sdioph.errors import Duplicate, Empty, NonPositive, NotPrime, UnsupportedPrimeSize
from sdioph.smooth import (
    SUnitValue,
    enumerate_smooth,
    exponent_value,
    factor_over,
    is_prime,
    is_smooth,
    new_prime_set,
    s_free_part,
)

S23 = new_prime_set([2, 3])
SMALL_SETS = [[2], [3], [2, 3], [2, 3, 5], [2, 5, 7], [3, 5, 7], [2, 3, 5, 7, 11, 13]]


def test_new_prime_set_sorts():
    S = new_prime_set([3, 2])
    assert S.primes == (2, 3)
    assert S.rank == 2


@pytest.mark.parametrize("primes, exc", [
    ([2, 2], Duplicate),
    ([4], NotPrime),
    ([1], NotPrime),
    ([], Empty),
    ([2**64 + 13], UnsupportedPrimeSize),
])
def test_new_prime_set_errors(primes, exc):
    with pytest.raises(exc):
        new_prime_set(primes)


def test_is_prime_against_trial_division():
    for n in range(2000):
        assert is_prime(n) == (n > 1 and prime_factors(n) == {n: 1})
    # strong pseudoprimes to several small bases
    for n in (3215031751, 2152302898747, 3474749660383, 341550071728321):
        assert not is_prime(n)
    assert is_prime(2**61 - 1)
    assert is_prime(18446744073709551557)  # largest prime below 2**64


@pytest.mark.parametrize("n, primes, exps, rest", [
    (40, [2, 5], (3, 1), 1),
    (40, [3], (0,), 40),
    (1, [2, 3], (0, 0), 1),
])
def test_factor_over_examples(n, primes, exps, rest):
    assert factor_over(n, new_prime_set(primes)) == (exps, rest)


def test_non_positive_inputs():
    for fn in (factor_over, is_smooth, s_free_part):
        with pytest.raises(NonPositive):
            fn(0, S23)


@pytest.mark.parametrize("n, primes, expected", [
    (13, [2, 3, 5, 7, 13], True),
    (13, [2, 3], False),
    (288, [2, 3], True),
    (1, [2, 3], True),
])
def test_is_smooth_examples(n, primes, expected):
    assert is_smooth(n, new_prime_set(primes)) is expected


@pytest.mark.parametrize("n, primes, expected", [(720, [2, 3], 5), (7, [7], 1), (1, [2, 3], 1)])
def test_s_free_part_examples(n, primes, expected):
    assert s_free_part(n, new_prime_set(primes)) == expected


@pytest.mark.parametrize("primes, limit, expected", [
    ([2, 3], 20, [1, 2, 3, 4, 6, 8, 9, 12, 16, 18]),
    ([2], 10, [1, 2, 4, 8]),
    ([2, 3, 5], 1, [1]),
])
def test_enumerate_smooth_examples(primes, limit, expected):
    assert enumerate_smooth(new_prime_set(primes), limit) == expected


@pytest.mark.parametrize("primes", [[2, 3], [2, 3, 5], [3, 5, 7], [2, 3, 5, 7, 11, 13]])
def test_enumerate_smooth_matches_sieve_to_a_million(primes):
    limit = 10**6
    table = smooth_sieve(limit, primes)
    expected = [k for k in range(1, limit + 1) if table[k]]
    assert enumerate_smooth(new_prime_set(primes), limit) == expected


def test_factor_over_round_trip_random_128_bit():
    rng = random.Random(20131)
    for _ in range(10_000):
        primes = rng.choice(SMALL_SETS)
        S = new_prime_set(primes)
        # bias toward highly S-divisible values
        n = rng.randrange(1, 2**64)
        for p in primes:
            n *= p ** rng.randrange(0, 12)
        n = n % 2**128 or 1
        exps, rest = factor_over(n, S)
        assert rest * exponent_value(exps, S) == n
        assert all(rest % p for p in primes)


@given(st.sampled_from(SMALL_SETS), st.integers(1, 10**9), st.integers(1, 10**9))
def test_s_free_part_multiplicative(primes, a, b):
    S = new_prime_set(primes)
    assert s_free_part(a * b, S) == s_free_part(a, S) * s_free_part(b, S)


@given(st.sampled_from(SMALL_SETS), st.integers(1, 10**12))
def test_s_free_part_divides_and_is_coprime(primes, n):
    S = new_prime_set(primes)
    f = s_free_part(n, S)
    assert n % f == 0
    assert all(f % p for p in primes)


@settings(max_examples=50)
@given(st.sampled_from(SMALL_SETS), st.integers(1, 5000))
def test_enumerate_smooth_strictly_increasing(primes, limit):
    out = enumerate_smooth(new_prime_set(primes), limit)
    assert out[0] == 1
    assert all(x < y for x, y in zip(out, out[1:]))
    assert all(is_smooth(v, new_prime_set(primes)) for v in out)


@given(st.integers(-10**6, 10**6).filter(bool), st.integers(1, 10**6))
def test_sunit_from_rational(num, den):
    q = Fraction(num, den)
    u = SUnitValue.from_rational(q, S23)
    smooth = set(prime_factors(abs(q.numerator))) | set(prime_factors(q.denominator)) <= {2, 3}
    if smooth:
        assert u is not None and u.value(S23) == q
    else:
        assert u is None


def test_sunit_json():
    u = SUnitValue.from_rational(Fraction(-9, 4), S23)
    assert u == SUnitValue(-1, (-2, 2))
    assert json.dumps(u.to_json()) == '{"sign": -1, "exp": [-2, 2]}'
    assert SUnitValue.from_rational(0, S23) is None
