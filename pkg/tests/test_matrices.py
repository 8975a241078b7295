import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from resatlas.arith import MPoly, det
from resatlas.matrices import (
    CoeffVector,
    EmptyVarietyError,
    build_M,
    carlitz_matrix,
    d_odd_system,
    d_system,
    d_values,
    h_system,
    names,
    odd_matrix,
    odd_ring,
    parity_polys,
    sylvester_resultant_check,
    symbolic_vector,
    trace_law,
)

# expected layouts, rows separated by ';'
M6 = "a1 a3 a5 0 0; a0 a2 a4 a6 0; 0 a1 a3 a5 0; 0 a0 a2 a4 a6; 0 0 a1 a3 a5"
M7 = ("a1 a3 a5 a7 0 0; a0 a2 a4 a6 0 0; 0 a1 a3 a5 a7 0; 0 a0 a2 a4 a6 0; "
      "0 0 a1 a3 a5 a7; 0 0 a0 a2 a4 a6")
M8 = ("a1 a3 a5 a7 0 0 0; a0 a2 a4 a6 a8 0 0; 0 a1 a3 a5 a7 0 0; 0 a0 a2 a4 a6 a8 0; "
      "0 0 a1 a3 a5 a7 0; 0 0 a0 a2 a4 a6 a8; 0 0 0 a1 a3 a5 a7")
ODD4 = ("b0 b2 b4 0 b1 b3 0 0; 0 b1 b3 0 b0 b2 b4 0; 0 b0 b2 b4 0 b1 b3 0; 0 0 b1 b3 0 b0 b2 b4; "
        "mu 0 0 0 -lam 0 0 0; 0 mu 0 0 0 -lam 0 0; 0 0 mu 0 0 0 -lam 0; 0 0 0 mu 0 0 0 -lam")


def layout(text):
    return [row.split() for row in text.split(";")]


def as_text(M):
    return [[str(x) for x in row] for row in M]


@pytest.mark.parametrize("m, text", [(6, M6), (7, M7), (8, M8)])
def test_matrix_layouts(m, text):
    assert as_text(build_M(m, symbolic_vector(m))) == layout(text)


def test_odd_matrix_layout():
    ring = odd_ring(4)
    g = dict(zip(ring, MPoly.gens(ring)))
    M = odd_matrix(4, [g[v] for v in names("b", 4)], g["lam"], g["mu"])
    assert as_text(M) == layout(ODD4)


def test_small_m():
    assert build_M(2, [5, 7, 9]) == [[7]]
    with pytest.raises(EmptyVarietyError):
        build_M(1, [1, 2])
    assert d_system(2).dump() == "D(2,0) = a1"


def test_coeff_vector_pads_with_zero():
    a = CoeffVector([1, 2, 3])
    assert a.m == 2 and a[-1] == 0 and a[3] == 0 and a[1] == 2


@pytest.mark.parametrize("m", range(3, 11))
def test_trace_law(m):
    ok, sign = trace_law(m)
    assert ok
    assert sign == (-1) ** m  # D(m, m-2) = (-1)^(m-2) tr M


@pytest.mark.parametrize("m", range(3, 9))
def test_resultant_sylvester(m):
    ok, _ = sylvester_resultant_check(m)
    assert ok


def _sympy_res_check(m, a):
    x = sympy.Symbol("x")
    odd, even = parity_polys(a)
    f = sum(c * x ** k for k, c in enumerate(odd))
    g = sum(c * x ** k for k, c in enumerate(even))
    res = sympy.resultant(f, g, x)
    return det(build_M(m, a)), res


@pytest.mark.parametrize("m", range(3, 9))
def test_resultant_against_sympy_at_points(m):
    """Second route: sympy's resultant at random integer points with nonzero leading terms."""
    rng = random.Random(m)
    for _ in range(3):
        a = [rng.randint(1, 9) * rng.choice([-1, 1]) for _ in range(m + 1)]
        d, r = _sympy_res_check(m, a)
        assert d == r or d == -r


@pytest.mark.parametrize("m", [3, 4, 5])
def test_resultant_against_sympy_symbolic(m):
    syms = sympy.symbols(f"a0:{m + 1}")
    x = sympy.Symbol("x")
    odd, even = parity_polys(list(syms))
    res = sympy.resultant(sum(c * x ** k for k, c in enumerate(odd)),
                          sum(c * x ** k for k, c in enumerate(even)), x)
    d = sympy.Matrix(build_M(m, list(syms))).det()
    assert sympy.expand(d - res) == 0 or sympy.expand(d + res) == 0


@given(st.integers(3, 7), st.data())
def test_d_values_match_symbolic(m, data):
    a = data.draw(st.lists(st.integers(-5, 5), min_size=m + 1, max_size=m + 1))
    D = d_system(m)
    vals = d_values(m, a)
    env = dict(zip(names("a", m), a))
    for i in range(m - 1):
        assert D[i].evaluate(env) == vals[i]
    assert vals[m - 1] == (-1) ** (m - 1)


@given(st.integers(3, 7), st.data())
def test_d_homogeneous_degree(m, data):
    """D(m, i) is homogeneous of degree m - 1 - i."""
    i = data.draw(st.integers(0, m - 2))
    p = d_system(m)[i]
    assert p.is_homogeneous() and p.total_degree() == m - 1 - i


def test_carlitz_entries():
    t = sympy.Symbol("t")
    a = sympy.symbols("a0:5")
    C = carlitz_matrix(list(a), 2, 3, t)
    for i in range(1, 4):
        for j in range(1, 4):
            want = sum((-1) ** l * sympy.binomial(2, l) * (a[2 * j - i - l] if 0 <= 2 * j - i - l <= 4 else 0)
                       * t ** (2 - l) for l in range(3))
            assert sympy.expand(C[i - 1][j - 1] - want) == 0


def test_carlitz_n0_is_M():
    a = list(range(1, 7))
    assert carlitz_matrix(a, 0, 4, 1) == build_M(5, a)


@pytest.mark.parametrize("m", range(3, 7))
def test_h_n0_is_signed_d(m):
    H, D = h_system(m, 0), d_system(m)
    for i in range(m - 1):
        assert H[(i, 0)] == (-1) ** (m - 1) * D[i]


def test_d_odd_system_against_direct_determinant():
    alpha = 3
    ring = odd_ring(alpha)
    Ds = d_odd_system(alpha)
    rng = random.Random(1)
    vals = {v: Fraction(rng.randint(1, 9), rng.randint(1, 4)) for v in ring}
    U, lam, mu = vals["U"], vals["lam"], vals["mu"]
    b = [vals[v] for v in names("b", alpha)]
    M = odd_matrix(alpha, b, lam, mu)
    for r in range(alpha):
        M[r][r] -= U / lam
    want = det(M)
    total = sum(D.evaluate(vals) * U ** j for j, D in enumerate(Ds))
    assert total == want
