import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from resatlas.arith import MPoly, Partition, charpoly_coeffs, det, rank
from resatlas.components import enumerate_components, param_at
from resatlas.components.jordan_rank import partition_from_ranks, rank_profile
from resatlas.components.lifts import (
    carlitz_blocks_identity,
    even_factorization,
    even_lift,
    even_lift_partition_at,
    even_rank_identity,
    even_submatrix_identity,
    h0_identity,
    interleave,
    is_pure_power,
    is_power_of_two,
    lambda_subspace_charpoly,
    lift_partition,
    nu_extend,
    nu_identity,
    nu_specialization,
    odd_charpoly_identity,
    odd_h_identity,
    odd_matrix_numeric,
    odd_segre,
    odd_segre_rank_certificate,
    segre_certificate,
)
from resatlas.forests import enumerate_forests, weight_orbits
from resatlas.matrices import build_M, d_odd_system, odd_ring

small = st.fractions(min_value=-9, max_value=9, max_denominator=4)


# -- nu ------------------------------------------------------------------------------

def test_nu_extend_identity_and_convolution():
    assert nu_extend([1, 2, 3], [1]) == [1, 2, 3]
    assert nu_extend([1, 1], [1, -1]) == [1, 0, -1]


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=4), small)
def test_nu_extend_is_polynomial_product(lam, b, x):
    ev = lambda p: sum(c * x ** k for k, c in enumerate(p))
    assert ev(nu_extend(lam, b)) == ev(lam) * ev(b)


@pytest.mark.parametrize("m", range(2, 7))
@pytest.mark.parametrize("i", range(0, 3))
def test_nu_identity(m, i):
    ok, sign = nu_identity(m, i)
    assert ok
    assert sign == (-1) ** m


@pytest.mark.parametrize("m", range(2, 8))
def test_nu_specialization(m):
    assert nu_specialization(m)


# -- even lift --------------------------------------------------------------------------

def test_interleave():
    assert interleave([1, 2, 3]) == [1, 0, 2, 0, 3]


@pytest.mark.parametrize("m", range(4, 11, 2))
def test_even_factorization(m):
    ok, sign = even_factorization(m)
    assert ok and sign == (-1) ** (m // 2)


@pytest.mark.parametrize("m", range(4, 11, 2))
def test_even_factorization_numeric_route(m):
    """Second route: compare characteristic polynomials at random points."""
    rng = random.Random(m)
    half = m // 2
    for _ in range(3):
        small_a = [rng.randint(-9, 9) for _ in range(half + 1)]
        big = charpoly_coeffs(build_M(m, interleave(small_a)))
        little = [0] * half + charpoly_coeffs(build_M(half, small_a))
        assert big == little or big == [-x for x in little]


def test_even_factorization_rejects_odd():
    with pytest.raises(ValueError):
        even_factorization(5)


@given(st.integers(2, 6), st.data())
def test_even_rank_identity(m, data):
    a = data.draw(st.lists(small, min_size=m + 1, max_size=m + 1))
    assume(any(a))  # a projective point
    assert even_rank_identity(a)


@given(st.integers(2, 5), st.integers(1, 3), st.data())
def test_even_submatrix(m, k, data):
    a = data.draw(st.lists(st.integers(-5, 5), min_size=m + 1, max_size=m + 1))
    assert even_submatrix_identity(a, k)


def test_lift_partition():
    for i in range(2, 8):
        assert lift_partition(Partition([1]), i - 1) == Partition([2] + [1] * (i - 2))
    assert lift_partition(Partition([3, 2]), 6) == Partition([4, 3, 1, 1, 1, 1])
    with pytest.raises(ValueError):
        lift_partition(Partition([1, 1, 1]), 2)


def _component_points():
    rng = random.Random(11)
    for i in range(1, 5):
        for j in range(1, i + 1):
            if i + j > 6:
                continue
            for F in enumerate_forests(i, j):
                for w, _ in weight_orbits(F):
                    c = [Fraction(rng.randint(2, 40), rng.randint(1, 5)) for _ in range(F.j)]
                    yield F, w, c


@pytest.mark.parametrize("case", list(_component_points()), ids=lambda c: c[0].bracket())
def test_even_lift_partition_at_components(case):
    F, w, c = case
    a = param_at(F, w, c)
    m = len(a) - 1
    small_p, big_p = even_lift_partition_at(a)
    assert big_p == lift_partition(small_p, m)


def test_even_lift_record():
    rec = next(r for r in enumerate_components(5, 1) if r.table_label == "C515").to_json()
    out = even_lift(rec, 7)
    assert (out["i"], out["j"], out["m"]) == (12, 2, 14)
    assert out["c"] == 4 * 2
    assert out["jordan"] == [4, 3, 1, 1, 1, 1, 1]
    assert "conjectural" in out["flags"]
    with pytest.raises(ValueError):
        even_lift(rec, 5)


# -- odd lift ---------------------------------------------------------------------------

def test_odd_segre_and_certificate():
    b = [Fraction(1), Fraction(-2), Fraction(3)]
    a = odd_segre(b, Fraction(5), Fraction(7))
    assert a == [7, 5, -14, -10, 21, 15]
    (lam, mu), b2 = segre_certificate(a)
    assert odd_segre(b2, lam, mu) == a
    assert segre_certificate([1, 0, 0, 1]) is None
    with pytest.raises(ValueError):
        segre_certificate([1, 2, 3])


@pytest.mark.parametrize("alpha", range(1, 4))
def test_odd_segre_rank(alpha):
    assert odd_segre_rank_certificate(alpha, seed=alpha)


@pytest.mark.parametrize("alpha", range(2, 5))
def test_odd_charpoly_identity(alpha):
    ok, sign = odd_charpoly_identity(alpha)
    assert ok and sign == 1


@pytest.mark.parametrize("alpha", range(2, 5))
def test_odd_charpoly_numeric_route(alpha):
    """Second route: det(M(2a+1)(tau b) - U) against U^a det(A - U/lam, B; mu, -lam) at points."""
    rng = random.Random(alpha)
    for _ in range(3):
        b = [Fraction(rng.randint(-9, 9)) for _ in range(alpha + 1)]
        lam, mu = Fraction(rng.randint(1, 9)), Fraction(rng.randint(1, 9))
        U = Fraction(rng.randint(-9, 9), rng.randint(1, 3))
        big = build_M(2 * alpha + 1, odd_segre(b, lam, mu))
        lhs = det([[x - (U if r == c else 0) for c, x in enumerate(row)] for r, row in enumerate(big)])
        M = odd_matrix_numeric(alpha, b, lam, mu)
        for r in range(alpha):
            M[r][r] -= U / lam
        assert lhs == det(M) * U ** alpha


@pytest.mark.parametrize("alpha", range(2, 4))
def test_odd_h_identity(alpha):
    res = odd_h_identity(alpha)
    assert res["ok"], res


@pytest.mark.parametrize("alpha", range(2, 6))
def test_h0_identity(alpha):
    ok, sign = h0_identity(alpha)
    assert ok and sign == 1


@pytest.mark.parametrize("alpha", range(2, 6))
def test_carlitz_blocks(alpha):
    assert carlitz_blocks_identity(alpha)


def test_d_odd_top_coefficient():
    # the coefficient of U^alpha is (-1)^alpha (-lam)^alpha / lam^alpha ... a unit
    for alpha in range(2, 5):
        top = d_odd_system(alpha)[alpha]
        assert top.is_constant() and top.constant_term() in (1, -1)


# -- the subspace a_1 = ... = a_(m-1) = 0 --------------------------------------------------

@pytest.mark.parametrize("m", range(2, 17))
def test_pure_power_iff_power_of_two(m):
    assert is_pure_power(lambda_subspace_charpoly(m), m) == is_power_of_two(m)


def test_subspace_examples():
    assert is_pure_power(lambda_subspace_charpoly(4), 4)
    assert is_pure_power(lambda_subspace_charpoly(8), 8)
    assert not is_pure_power(lambda_subspace_charpoly(6), 6)
