import math
import random
import warnings
from fractions import Fraction
from itertools import permutations

import pytest

from negabeta import kernels
from negabeta.oracle import (
    BudgetExceeded,
    affine_pieces,
    allowed_patterns_integer,
    allowed_patterns_real,
    boundary_only_patterns,
    minus_beta_digits,
    nbar_bruteforce,
    orbit,
    parse_rational,
    t_map,
    verify_witness,
)
from negabeta.perm import Permutation, parse_permutation
from negabeta.segment import nbar
from negabeta.word import alt_compare_letters

P = parse_permutation
BACKENDS = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])


def names(patterns):
    return set(patterns.strings())


def S(n):
    return {str(Permutation(v)) for v in permutations(range(1, n + 1))}


@pytest.mark.parametrize("backend", BACKENDS)
def test_integer_examples(backend):
    assert names(allowed_patterns_integer(2, 2, backend=backend)) == {"12", "21"}
    assert names(allowed_patterns_integer(2, 3, backend=backend)) == S(3)
    assert "4321" not in names(allowed_patterns_integer(2, 4, backend=backend))


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("N", [2, 3, 4])
@pytest.mark.parametrize("n", range(1, 6))
def test_integer_monotone_in_N(backend, N, n):
    small = allowed_patterns_integer(N, n, backend=backend)
    big = allowed_patterns_integer(N + 1, n, backend=backend)
    assert small.issubset(big)


def sample_patterns(N, n, count, seed):
    """Patterns at random rational points, iterated directly."""
    rng = random.Random(seed)
    found = set()
    for _ in range(count):
        x = Fraction(rng.randrange(1, 10 ** 6), 10 ** 6)
        vals = [x]
        for _ in range(n - 1):
            y = N * vals[-1]
            vals.append(1 - (y - math.floor(y)))
        if len(set(vals)) == n:
            order = sorted(range(n), key=vals.__getitem__)
            ranks = [0] * n
            for r, i in enumerate(order, 1):
                ranks[i] = r
            found.add(tuple(ranks))
    return found


@pytest.mark.parametrize("backend", BACKENDS)
def test_integer_contains_random_orbits(backend):
    for N, n in [(2, 5), (3, 5), (4, 4)]:
        assert sample_patterns(N, n, 3000, N * 10 + n) <= allowed_patterns_integer(N, n, backend=backend).members


def test_integer_budget():
    with pytest.raises(BudgetExceeded):
        allowed_patterns_integer(10, 7, budget=1000)
    with pytest.raises(ValueError):
        allowed_patterns_integer(1, 3)


def test_real_examples():
    assert names(allowed_patterns_real(Fraction(3, 2), 3)) == S(3) - {"312"}
    assert names(allowed_patterns_real(Fraction(7, 4), 3)) == S(3)


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("n", range(1, 6))
def test_cross_oracle_equality(N, n):
    assert allowed_patterns_real(N, n).members == allowed_patterns_integer(N, n).members


@pytest.mark.parametrize("n", range(2, 5))
def test_real_monotone_in_beta(n):
    betas = [Fraction(k, 20) for k in range(22, 80, 3)]
    sets = [allowed_patterns_real(b, n) for b in betas]
    for a, b in zip(sets, sets[1:]):
        assert a.issubset(b)


def test_no_boundary_only_patterns():
    for k in range(21, 84, 4):
        for n in range(2, 6):
            assert len(boundary_only_patterns(Fraction(k, 20), n)) == 0


def test_affine_pieces_are_affine():
    beta = Fraction(13, 5)
    for pc in affine_pieces(beta, 4):
        for t in (Fraction(1, 3), Fraction(1, 2), Fraction(5, 7)):
            x = pc.lo + t * (pc.hi - pc.lo)
            assert orbit(beta, x, 4) == [s * x + c for s, c in pc.maps]


def test_real_budget():
    with pytest.raises(BudgetExceeded):
        allowed_patterns_real(Fraction(7, 2), 6, piece_budget=50)


@pytest.mark.parametrize("perm, expected", [("312", 2), ("12345", 4), ("23654718", 5)])
def test_nbar_bruteforce_examples(perm, expected):
    assert nbar_bruteforce(P(perm)) == expected


def test_nbar_bruteforce_matches_formula_small():
    for n in range(2, 6):
        for v in permutations(range(1, n + 1)):
            pi = Permutation(v)
            assert nbar_bruteforce(pi) == nbar(pi)


def test_digits_examples():
    assert minus_beta_digits(2, 5) == (2, 2, 2, 2, 2)
    assert minus_beta_digits(Fraction(3, 2), 6) == (1, 0, 0, 0, 0, 1)
    with pytest.raises(ValueError):
        minus_beta_digits(1, 3)


def test_digits_admissible():
    rng = random.Random(7)
    for _ in range(30):
        beta = Fraction(rng.randrange(101, 500), 100)
        a = minus_beta_digits(beta, 64)
        assert all(0 <= d <= math.floor(beta) for d in a)
        for k in range(1, 64):
            window = 64 - k
            assert alt_compare_letters(a[k:], a[:window]) <= 0


def test_t_map_and_parse():
    assert t_map(Fraction(3, 2), Fraction(1)) == Fraction(1, 2)
    assert parse_rational("7/4") == Fraction(7, 4)
    assert parse_rational("1.75") == Fraction(7, 4)
    with pytest.raises(ValueError):
        parse_rational("x")


# -- witnesses ---------------------------------------------------------------


@pytest.mark.parametrize(
    "perm, beta, m",
    [("23654718", Fraction(17, 4), 4), ("564132", Fraction(9, 4), 3), ("6435721", Fraction(11, 4), None)],
)
def test_verify_examples(perm, beta, m):
    report = verify_witness(P(perm), beta, m)
    assert report.passed and report.failure is None
    assert report.orbit_agrees in (True, None)


def test_verify_none_case_uses_zeta_omega():
    report = verify_witness(P("6435721"), Fraction(11, 4))
    assert str(report.witness) == "211220·ω"


def test_verify_values_realize_pattern():
    report = verify_witness(P("15237864"), Fraction(32, 10), 4)
    assert report.passed
    vals = report.values
    order = sorted(range(8), key=vals.__getitem__)
    assert tuple(order.index(i) + 1 for i in range(8)) == P("15237864").values
    assert all(0 <= v <= 1 for v in vals)


def test_verify_below_bbar_fails_with_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        report = verify_witness(P("312"), Fraction(3, 2))
    assert not report.passed
    assert report.failure in ("membership", "pattern")
    assert any("B-bar" in str(w.message) for w in caught)


def test_verify_rejects_beta_at_most_one():
    with pytest.raises(ValueError):
        verify_witness(P("312"), 1)
