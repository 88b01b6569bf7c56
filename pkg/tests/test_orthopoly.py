from fractions import Fraction as F

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from helpers import jfraction_by_determinants, moments_by_jacobi_recurrence

from expriordan.catalog import pair, sec_series
from expriordan.orthopoly import (
    Recurrence,
    cf_to_ogf,
    coefficient_array,
    hankel,
    hankel_formula_check,
    hankel_transform,
    jfraction,
    moments,
    recurrence_from_jacobi,
)
from expriordan.production import JacobiParams
from expriordan.riordan import format_polynomial, mat_inverse


TANH_PARAMS = JacobiParams(0, -2, 0, -1)
ARCTAN_PARAMS = JacobiParams(0, 2, 0, 1)
HERMITE_LIKE_PARAMS = JacobiParams(0, -2, 0, 0)
GOMPERTZ_REC = Recurrence(b=tuple(-k for k in range(10)), lam=tuple(-k for k in range(1, 10)))


def _family(params: JacobiParams, n: int) -> list[str]:
    arr = coefficient_array(recurrence_from_jacobi(params, n), n)
    return [format_polynomial(arr.rows[i][: i + 1]) for i in range(n + 1)]


# ---------------------------------------------------------------------------
# coefficient arrays
# ---------------------------------------------------------------------------


def test_tanh_family_polynomials():
    assert _family(TANH_PARAMS, 6) == [
        "1",
        "x",
        "x^2 + 2",
        "x^3 + 8x",
        "x^4 + 20x^2 + 24",
        "x^5 + 40x^3 + 184x",
        "x^6 + 70x^4 + 784x^2 + 720",
    ]


def test_arctan_family_polynomials():
    assert _family(ARCTAN_PARAMS, 6) == [
        "1",
        "x",
        "x^2 - 2",
        "x^3 - 8x",
        "x^4 - 20x^2 + 24",
        "x^5 - 40x^3 + 184x",
        "x^6 - 70x^4 + 784x^2 - 720",
    ]


def test_hermite_like_family_polynomials():
    assert _family(HERMITE_LIKE_PARAMS, 6) == [
        "1",
        "x",
        "x^2 + 2",
        "x^3 + 6x",
        "x^4 + 12x^2 + 12",
        "x^5 + 20x^3 + 60x",
        "x^6 + 30x^4 + 180x^2 + 120",
    ]


def test_coefficient_array_requires_enough_data():
    with pytest.raises(ValueError, match="too short"):
        coefficient_array(Recurrence(b=(0,), lam=()), 2)


def test_coefficient_array_unit_diagonal():
    arr = coefficient_array(recurrence_from_jacobi(TANH_PARAMS, 8), 8)
    assert arr.is_unit_diagonal()


# ---------------------------------------------------------------------------
# moments
# ---------------------------------------------------------------------------


def test_arctan_moments_are_secant_squared_expansion():
    rec = recurrence_from_jacobi(ARCTAN_PARAMS, 8)
    assert moments(rec, 8) == (1, 0, 2, 0, 16, 0, 272, 0, 7936)


def test_identity_recurrence_moments():
    rec = Recurrence(b=(0,) * 6, lam=(0,) * 5)
    assert moments(rec, 6) == (1, 0, 0, 0, 0, 0, 0)


def test_gompertz_moments():
    # Exact elimination of the coefficient array; cross-checked below by the
    # Jacobi-recurrence route and by the series expansion of the first
    # catalog column.  A sometimes-quoted "1, 0, -1, 12, -9, 9" is a
    # corruption of these values.
    got = moments(GOMPERTZ_REC, 6)
    assert got == (1, 0, -1, 1, 2, -9, 9)
    assert got == moments_by_jacobi_recurrence(GOMPERTZ_REC, 6)
    g, _ = pair("gompertz", 6)
    assert got == g.egf()


def test_gompertz_p1_is_monic():
    # b_0 = 0 forces P_1 = x under the monic normalization.
    arr = coefficient_array(GOMPERTZ_REC, 1)
    assert arr.rows[1] == (0, 1)


@given(
    b=st.lists(st.integers(-3, 3), min_size=6, max_size=6),
    lam=st.lists(st.integers(-3, 3), min_size=5, max_size=5),
)
@settings(max_examples=30)
def test_moment_routes_agree(b, lam):
    rec = Recurrence(b=tuple(map(F, b)), lam=tuple(map(F, lam)))
    assert moments(rec, 6) == moments_by_jacobi_recurrence(rec, 6)


def test_moment_matrix_first_column():
    rec = recurrence_from_jacobi(TANH_PARAMS, 6)
    inv = mat_inverse(coefficient_array(rec, 6))
    assert inv.column(0) == moments(rec, 6)


def test_gram_orthogonality():
    # sum_j a[n][j] m[i+j] = 0 for i < n: direct summation, small degrees.
    for params in (TANH_PARAMS, ARCTAN_PARAMS, HERMITE_LIKE_PARAMS):
        rec = recurrence_from_jacobi(params, 8)
        arr = coefficient_array(rec, 4)
        m = moments(rec, 8)
        for n in range(1, 5):
            for i in range(n):
                total = sum(arr.rows[n][j] * m[i + j] for j in range(n + 1))
                assert total == 0


# ---------------------------------------------------------------------------
# Hankel transforms
# ---------------------------------------------------------------------------


def test_hankel_of_sech_squared_expansion():
    g, _ = pair("tanh", 12)
    assert hankel_transform(g.egf(), 4) == [1, -2, -24, 3456, 9953280]


def test_hankel_of_tanh_expansion():
    _, f = pair("tanh", 12)
    assert hankel_transform(f.egf(), 5) == [0, -1, 0, 144, 0, -1194393600]


def test_hankel_of_zero_sequence():
    assert hankel_transform([F(0)] * 9, 4) == [0, 0, 0, 0, 0]


def test_hankel_needs_enough_terms():
    with pytest.raises(ValueError, match="need 5 terms"):
        hankel([1, 2, 3], 2)


def test_hankel_formula_checks():
    assert hankel_formula_check("sech2", 5)
    assert hankel_formula_check("tanh", 6)
    assert hankel_formula_check("sec2_moments", 5)
    with pytest.raises(ValueError, match="unknown"):
        hankel_formula_check("nope", 3)


def test_sec2_moment_hankel_example():
    rec = recurrence_from_jacobi(ARCTAN_PARAMS, 8)
    m = moments(rec, 8)
    assert m == (sec_series(8) ** 2).egf()
    assert hankel(m, 2) == 24  # (1*2)^2 * (2*3)^1


@given(
    b=st.lists(st.integers(-2, 2), min_size=8, max_size=8),
    lam=st.lists(st.integers(-2, 2), min_size=7, max_size=7),
)
@settings(max_examples=30)
def test_hankel_jacobi_product_identity(b, lam):
    # h_n = prod_{k=1..n} lambda_k^{n+1-k} for the moments of any monic
    # three-term family, vanishing lambdas included.
    rec = Recurrence(b=tuple(map(F, b)), lam=tuple(map(F, lam)))
    m = moments(rec, 8)
    for n in range(1, 5):
        expected = F(1)
        for k in range(1, n + 1):
            expected *= rec.lam[k - 1] ** (n + 1 - k)
        assert hankel(m, n) == expected


# ---------------------------------------------------------------------------
# J-fractions
# ---------------------------------------------------------------------------


def test_jfraction_gompertz():
    g, _ = pair("gompertz", 20)
    rec = jfraction(g.egf(), 9)
    assert rec.b == tuple(-k for k in range(9))
    assert rec.lam == tuple(-k for k in range(1, 10))


def test_jfraction_aerated_catalan():
    m = [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42]
    rec = jfraction(m, 5)
    assert rec.b == (0, 0, 0, 0, 0)
    assert rec.lam == (1, 1, 1, 1, 1)


def test_jfraction_sec2_moments():
    rec_in = recurrence_from_jacobi(ARCTAN_PARAMS, 13)
    m = moments(rec_in, 13)
    rec = jfraction(m, 6)
    assert rec.b == (0,) * 6
    assert rec.lam == tuple(k * (k + 1) for k in range(1, 7))


def test_jfraction_matches_determinant_ratios():
    g, _ = pair("gompertz", 16)
    seq = g.egf()
    via_peel = jfraction(seq, 6)
    via_dets = jfraction_by_determinants(seq, 6)
    assert via_peel.b == via_dets.b
    assert via_peel.lam == via_dets.lam


def test_jfraction_short_input_raises():
    with pytest.raises(ValueError, match="need 9 moments"):
        jfraction([1, 0, 1], 4)


def test_jfraction_vanishing_determinant_raises():
    with pytest.raises(ValueError, match="vanishing Hankel determinant"):
        jfraction([1, 0, 0, 0, 0, 0, 0], 3)


def test_cf_to_ogf_trivial():
    rec = Recurrence(b=(0, 0, 0), lam=(0, 0))
    assert cf_to_ogf(rec, 6).coeffs == (1, 0, 0, 0, 0, 0, 0)


def test_cf_to_ogf_gompertz():
    # The J-fraction OGF carries the moments as ordinary coefficients.
    got = cf_to_ogf(GOMPERTZ_REC, 6)
    assert got.coeffs == (1, 0, -1, 1, 2, -9, 9)


def test_cf_to_ogf_catalan():
    rec = Recurrence(b=(0,) * 6, lam=(1,) * 6)
    assert cf_to_ogf(rec, 10).coeffs == (1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42)


@given(
    b=st.lists(st.integers(-2, 2), min_size=4, max_size=4),
    lam=st.lists(st.integers(1, 3), min_size=4, max_size=4),
)
@settings(max_examples=30)
def test_jfraction_round_trip(b, lam):
    rec = Recurrence(b=tuple(map(F, b)), lam=tuple(map(F, lam)))
    ogf = cf_to_ogf(rec, 9)
    back = jfraction(ogf.coeffs, 4)
    assert back.b == rec.b
    assert back.lam == rec.lam
