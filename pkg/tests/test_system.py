from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import any_zero_subsum, catalan_by_powers_of_two
from sdioph.errors import NonPositive, NotAQuadruple, SystemUnsatisfied, ZeroCoordinate
from sdioph.smooth import new_prime_set
from sdioph.system import (
    Classification,
    Sextuple,
    SolutionVector,
    catalan_scan,
    check_product_identities,
    check_system,
    classify_degenerate,
    equation4_scan,
    find_vanishing_subsums,
    has_vanishing_subsum,
    normalize_projective,
    positivity_witness,
    recover_quadruple,
    sextuple_of,
    solution_vector,
    vanishing_subsets,
)

Q1234 = Sextuple((3, 4, 5, 7, 9, 13))
Q1357 = Sextuple((4, 6, 8, 16, 22, 36))

quadruples = st.lists(st.integers(1, 10**6), min_size=4, max_size=4, unique=True).map(sorted).map(tuple)


def test_sextuple_of_examples():
    assert sextuple_of((1, 2, 3, 4)).s == (3, 4, 5, 7, 9, 13)
    assert sextuple_of((1, 3, 5, 7)).s == (4, 6, 8, 16, 22, 36)
    with pytest.raises(NotAQuadruple):
        sextuple_of((1, 2, 3))
    with pytest.raises(NotAQuadruple):
        sextuple_of((4, 3, 2, 1))


def test_certificates():
    sx = sextuple_of((1, 2, 3, 4), new_prime_set([2, 3, 5, 7, 13]))
    assert sx.certificates == ((0, 1, 0, 0, 0), (2, 0, 0, 0, 0), (0, 0, 1, 0, 0),
                               (0, 0, 0, 1, 0), (0, 2, 0, 0, 0), (0, 0, 0, 0, 1))
    assert sextuple_of((1, 3, 5, 7), new_prime_set([2, 3])).certificates is None


def test_product_identities_examples():
    assert check_product_identities(Q1234) == 24
    assert check_product_identities(Q1357) == 105
    assert check_product_identities(Sextuple((3, 4, 5, 7, 9, 14))) is None


def test_check_system_examples():
    assert check_system(Q1234)
    assert check_system(Q1357)
    assert not check_system(Sextuple((3, 4, 5, 7, 9, 12)))


def test_solution_vector_examples():
    assert solution_vector(Q1234).y == (39, 3, 13, 36, 4, 9)
    assert solution_vector(Q1357).y == (144, 4, 36, 132, 6, 22)
    with pytest.raises(SystemUnsatisfied):
        solution_vector(Sextuple((3, 4, 5, 7, 9, 12)))


def test_vanishing_subsums_examples():
    rep = find_vanishing_subsums(SolutionVector((39, 3, 13, 36, 4, 9)))
    assert rep.vanishing_subsets == ((1, 2, 4), (3, 5, 6))
    assert rep.classification is Classification.THREE_TERM_CASE_1
    rep = find_vanishing_subsums(SolutionVector((144, 4, 36, 132, 6, 22)))
    assert rep.vanishing_subsets == ()
    assert rep.classification is Classification.NON_DEGENERATE


@given(st.lists(st.integers(0, 500), min_size=6, max_size=6, unique=True))
def test_odd_distinct_entries_have_no_cancelling_pair(halves):
    y = tuple(2 * h + 1 for h in halves)
    subsets = vanishing_subsets(SolutionVector(y).signed_terms())
    assert not [s for s in subsets if len(s) == 2]


@given(st.lists(st.integers(-40, 40), min_size=1, max_size=7))
def test_subset_scans_agree(terms):
    expected = any_zero_subsum(terms)
    assert has_vanishing_subsum(terms) == expected
    assert bool(vanishing_subsets(terms)) == expected


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5))
def test_vanishing_complements_listed(head):
    terms = head + [-sum(head)]
    found = set(vanishing_subsets(terms))
    full = set(range(1, len(terms) + 1))
    for s in found:
        assert tuple(sorted(full - set(s))) in found


def test_classify_examples():
    assert classify_degenerate(Q1234) is Classification.THREE_TERM_CASE_1
    assert classify_degenerate(Q1357) is Classification.NON_DEGENERATE
    with pytest.raises(SystemUnsatisfied):
        classify_degenerate(Sextuple((3, 4, 5, 7, 9, 12)))


@pytest.mark.parametrize("s, case", [
    # s1 = s5 + s2 with s6 (s1 - 1) = s5 s2
    ((16, 6, 1, 1, 10, 4), Classification.THREE_TERM_CASE_2),
    # s5 = s1 + s6 with s2 (s5 - 1) = s1 s6
    ((6, 4, 1, 1, 16, 10), Classification.THREE_TERM_CASE_3),
    # s2 = s1 + s6 with s5 (s2 - 1) = s1 s6
    ((6, 16, 1, 1, 4, 10), Classification.THREE_TERM_CASE_4),
])
def test_other_three_term_cases(s, case):
    sx = Sextuple(s)
    assert classify_degenerate(sx) is case
    triple = {
        Classification.THREE_TERM_CASE_2: (1, 3, 4),
        Classification.THREE_TERM_CASE_3: (1, 4, 5),
        Classification.THREE_TERM_CASE_4: (1, 4, 6),
    }[case]
    assert triple in find_vanishing_subsums(solution_vector(sx)).vanishing_subsets


def test_other_bucket():
    # s1 = s2 and s5 = s6 cancels in pairs: not one of the three-term lines
    assert classify_degenerate(Sextuple((3, 3, 0, 0, 7, 7))) is Classification.OTHER


@given(st.lists(st.integers(1, 10**4), min_size=6, max_size=6).map(lambda v: [2 * x + 1 for x in v]))
def test_all_odd_never_case_1(s):
    sx = Sextuple(tuple(s))
    if check_system(sx):
        assert classify_degenerate(sx) is not Classification.THREE_TERM_CASE_1


def test_recover_examples():
    assert recover_quadruple(Q1234) == (1, 2, 3, 4)
    assert recover_quadruple(Q1357) == (1, 3, 5, 7)
    assert recover_quadruple(Sextuple((3, 4, 5, 7, 9, 14))) is None


def test_recover_rejects_inconsistent_s3():
    # a, b, c, d all come out integral, but s3 is not ad+1
    assert recover_quadruple(Sextuple((3, 4, 6, 7, 9, 13))) is None


@given(quadruples)
def test_round_trip_and_identities(q):
    sx = sextuple_of(q)
    a, b, c, d = q
    assert recover_quadruple(sx) == q
    assert check_system(sx)
    assert check_product_identities(sx) == a * b * c * d
    s1, s2, s3, s4, s5, s6 = sx.s
    assert s1 < s2 < s3 < s5 < s6 and s1 < s2 < s4 < s5 < s6
    swapped = Sextuple((s1, s2, s4, s3, s5, s6))
    assert check_product_identities(swapped) == check_product_identities(sx)


@given(quadruples)
def test_no_short_vanishing_subsums_for_quadruples(q):
    report = find_vanishing_subsums(solution_vector(sextuple_of(q)))
    assert all(len(s) >= 3 for s in report.vanishing_subsets)
    for s in report.vanishing_subsets:
        if 1 in s and len(s) == 3:
            assert 4 in s
            assert report.classification is Classification.THREE_TERM_CASE_1


def test_normalize_examples():
    expected = (Fraction(1), Fraction(1, 13), Fraction(1, 3), Fraction(12, 13), Fraction(4, 39), Fraction(3, 13))
    assert normalize_projective((39, 3, 13, 36, 4, 9)) == expected
    assert normalize_projective((78, 6, 26, 72, 8, 18)) == expected
    with pytest.raises(ZeroCoordinate):
        normalize_projective((0, 1, 1, 1, 1, 1))


nonzero_q = st.fractions(min_value=-1000, max_value=1000, max_denominator=50).filter(bool)


@given(st.lists(nonzero_q, min_size=6, max_size=6), nonzero_q)
def test_normalize_scalar_invariant_and_idempotent(v, lam):
    n = normalize_projective(v)
    assert normalize_projective([lam * x for x in v]) == n
    assert normalize_projective(n) == n


def test_positivity_examples():
    assert positivity_witness(Q1234) == 23
    s3, s4 = Q1234[3], Q1234[4]
    assert s3 * s4 - s3 - s4 == 23
    assert positivity_witness(Q1357) == 104
    with pytest.raises(NonPositive):
        positivity_witness(Sextuple((1, 4, 5, 7, 9, 13)))


@pytest.mark.parametrize("p, expected", [
    (3, [(1, 1, -1), (2, 1, 1), (3, 2, -1)]),
    (5, [(2, 1, -1)]),
    (11, []),
])
def test_catalan_examples(p, expected):
    assert [s.as_tuple() for s in catalan_scan(p, 40)] == expected


@pytest.mark.parametrize("p", [3, 5, 7, 13, 17, 31, 127, 257])
@pytest.mark.parametrize("max_exp", [1, 7, 40])
def test_catalan_against_power_of_two_oracle(p, max_exp):
    assert [s.as_tuple() for s in catalan_scan(p, max_exp)] == catalan_by_powers_of_two(p, max_exp)


def test_catalan_partitions():
    base = catalan_scan(3, 200)
    assert catalan_scan(3, 200, partitions=4) == base


def test_catalan_rejects_even():
    with pytest.raises(ValueError):
        catalan_scan(2, 10)
    with pytest.raises(ValueError):
        catalan_scan(9, 10)


def _eq4_oracle(p, max_exp):
    # brute force over all six exponents; the left side is bounded by twice the largest summand
    top = 2 * 2**max_exp * p**max_exp
    lhs = [(2**a * p**b, a, b) for a in range(top.bit_length() + 1) for b in range(top.bit_length() + 1)
           if 2**a * p**b <= top]
    rhs = [(2**a * p**b, a, b) for a in range(max_exp + 1) for b in range(max_exp + 1)]
    return sorted((a6, b6, a5, b5, a2, b2) for v6, a6, b6 in lhs for v5, a5, b5 in rhs
                  for v2, a2, b2 in rhs if v6 == v5 + v2)


@pytest.mark.parametrize("p, max_exp", [(3, 4), (5, 3), (7, 1), (7, 3), (17, 2)])
def test_equation4_against_oracle(p, max_exp):
    assert equation4_scan(p, max_exp) == _eq4_oracle(p, max_exp)


def test_equation4_examples():
    sols = equation4_scan(3, 4)
    assert (0, 1, 0, 0, 1, 0) in sols
    assert (2, 1, 3, 0, 2, 0) in sols
    assert (3, 0, 0, 0, 0, 1) in equation4_scan(7, 1)


@pytest.mark.parametrize("p", [3, 5, 7, 17, 31])
def test_equation4_projects_onto_catalan(p):
    max_exp = 6
    catalan = {s.as_tuple() for s in catalan_scan(p, 3 * max_exp)}
    for a6, b6, a5, b5, a2, b2 in equation4_scan(p, max_exp):
        # strip common powers; one of the three terms becomes 1
        ga, gb = min(a6, a5, a2), min(b6, b5, b2)
        terms = [(a6 - ga, b6 - gb), (a5 - ga, b5 - gb), (a2 - ga, b2 - gb)]
        assert (0, 0) in terms
        pure = [(a, b) for a, b in terms if (a, b) != (0, 0)]
        x = max(a for a, _ in pure)
        y = max(b for _, b in pure)
        if x >= 1 and y >= 1 and all(a == 0 or b == 0 for a, b in pure):
            sign = 2**x - p**y
            assert (x, y, sign) in catalan
