import pytest

from expriordan.catalog import (
    build_entry,
    build_inverse_entry,
    ids,
    inverse_za_closed_form,
    pair,
    za_closed_form,
)
from expriordan.production import (
    JacobiParams,
    ZAPair,
    derivative_production_check,
    power_first_row,
    production_analytic,
    production_definitional,
    tridiagonal_params,
    za_sequences,
)
from expriordan.riordan import inverse
from expriordan.series import one, series

DERIVATIVE_SUBGROUP_IDS = tuple(eid for eid in ids() if eid != "pascal")


def test_pascal_production_is_bidiagonal_ones():
    p = production_definitional(build_entry("pascal", 8))
    for n in range(p.dim):
        for k in range(p.dim):
            assert p.entry(n, k) == (1 if k in (n, n + 1) else 0)


def test_pascal_za_is_one_one():
    g, f = pair("pascal", 8)
    za = za_sequences(g, f)
    assert za.z == one(7)
    assert za.a == one(7)


def test_cos_sin_production_rows():
    p = production_definitional(build_entry("cos_sin", 10))
    assert p.rows[3][:5] == (-3, 0, -6, 0, 1)
    assert p.rows[5][:7] == (-45, 0, -45, 0, -15, 0, 1)


def test_cos_sin_za_closed_forms():
    g, f = pair("cos_sin", 12)
    za = za_sequences(g, f)
    stated = za_closed_form("cos_sin", 11)
    assert za.a == stated.a  # sqrt(1-x^2)
    assert za.z == stated.z  # -x/sqrt(1-x^2)


def test_tanh_za_is_polynomial():
    g, f = pair("tanh", 10)
    za = za_sequences(g, f)
    assert za.z == series([0, -2], order=9)
    assert za.a == series([1, 0, -1], order=9)


def test_erf_production_row():
    p = production_definitional(build_entry("erf", 8))
    assert p.rows[3][:5] == (-4, 0, -12, 0, 1)


def test_analytic_from_inverse_cos_sin():
    # Z = sin*sec^2 = (sec)', A = sec for the inverse of the circular pair.
    za = inverse_za_closed_form("cos_sin", 12)
    p = production_analytic(za, 8)
    assert p.rows[5][:7] == (61, 0, 75, 0, 15, 0, 1)
    assert p.rows[3][:5] == (5, 0, 6, 0, 1)
    direct = production_definitional(build_inverse_entry("cos_sin", 9))
    assert direct.leading(8) == p.leading(8)


@pytest.mark.parametrize("eid", ids())
def test_dual_route_production_agrees(eid):
    order = 10
    g, f = pair(eid, order)
    definitional = production_definitional(build_entry(eid, order))
    analytic = production_analytic(za_sequences(g, f), order - 1)
    assert definitional.leading(order - 1) == analytic


@pytest.mark.parametrize("eid", DERIVATIVE_SUBGROUP_IDS)
def test_derivative_subgroup_closed_production(eid):
    # U . [1/fbar', x] equals the production matrix of [f', f].
    order = 10
    _, f = pair(eid, order)
    closed = derivative_production_check(f)
    definitional = production_definitional(build_entry(eid, order))
    block = order - 1
    assert closed.leading(block) == definitional.leading(block)


@pytest.mark.parametrize(
    "eid",
    [eid for eid in DERIVATIVE_SUBGROUP_IDS if za_closed_form(eid, 8) is not None],
)
def test_stated_za_forms_match_computed(eid):
    order = 12
    g, f = pair(eid, order)
    za = za_sequences(g, f)
    stated = za_closed_form(eid, order - 1)
    assert za.z == stated.z
    assert za.a == stated.a


def test_stated_inverse_za_forms_match_computed():
    for eid in ("arctan", "algebraic", "quartic", "gudermann", "cos_sin"):
        order = 12
        g, f = (s for s in pair(eid, order))
        inv = inverse(build_entry(eid, order))
        za = za_sequences(inv.g, inv.f)
        stated = inverse_za_closed_form(eid, order - 1)
        assert za.z == stated.z, eid
        assert za.a == stated.a, eid


def test_tridiagonal_params_examples():
    assert tridiagonal_params(
        production_definitional(build_inverse_entry("arctan", 10))
    ) == JacobiParams(0, 2, 0, 1)
    assert tridiagonal_params(
        production_definitional(build_entry("tanh", 10))
    ) == JacobiParams(0, -2, 0, -1)
    assert tridiagonal_params(production_definitional(build_entry("algebraic", 10))) is None
    assert tridiagonal_params(production_definitional(build_entry("pascal", 10))) == JacobiParams(
        1, 0, 0, 0
    )


def test_tanh_params_give_recurrence_coefficients():
    params = JacobiParams(0, -2, 0, -1)
    assert [params.subdiagonal(k) for k in range(1, 5)] == [-2, -6, -12, -20]
    assert all(params.subdiagonal(k) == -k * (k + 1) for k in range(1, 8))


def test_tridiagonal_params_verifies_whole_matrix():
    # A matrix that fits (alpha, beta) at the corner but breaks deeper in.
    p = production_definitional(build_entry("tanh", 8))
    rows = [list(r) for r in p.rows]
    rows[4][3] += 1
    from expriordan.riordan import TriMatrix

    assert tridiagonal_params(TriMatrix(tuple(tuple(r) for r in rows))) is None


def test_generation_property():
    # The first row of P^n reproduces row n of the array.
    for eid in ("cos_sin", "gompertz", "erf"):
        arr = build_entry(eid, 9)
        p = production_definitional(arr)
        for n in range(6):
            got = power_first_row(p, n)[: n + 1]
            assert got == arr.matrix.rows[n][: n + 1]


def test_za_validation():
    with pytest.raises(ValueError, match="start with 1"):
        ZAPair(z=one(4), a=series([2], order=4))
    with pytest.raises(ValueError, match="order mismatch"):
        za_sequences(one(4), series([0, 1], order=5))


def test_analytic_needs_enough_coefficients():
    za = ZAPair(z=one(4), a=one(4))
    with pytest.raises(ValueError, match="needs z to order"):
        production_analytic(za, 6)
