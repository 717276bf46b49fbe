from fractions import Fraction

from mapscope.series import (
    A_FORMULA,
    A_HYP,
    A_ZEIL,
    B1,
    B2,
    B3,
    B2_EQUATION,
    B3_EQUATION,
    P,
    PPRIME,
    RationalSeries,
    ZEILBERGER_CUBIC,
    asymptotic,
    b3_singularity,
    compose,
    exact_coefficient,
    maps_with_edges,
    p_coefficient,
    primitive_maps_with_edges,
    series,
    solve_equation,
    sqrt_series,
    tutte_count,
)

import pytest

A_PREFIX = [2, 1, 2, 6, 22, 91, 408, 1938, 9614]
P_PREFIX = [2, 1, 1, 3, 9, 32, 122]
PPRIME_PREFIX = [2, -1, 0, 2, 6, 23, 90]
B1_PREFIX = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232]     # x^1..x^10
B2_PREFIX = [1, 0, 1, 1, 5, 11, 39, 113, 377, 1207]
B3_PREFIX = [1, 0, 1, 1, 5, 13, 48, 160, 578, 2078]
PRIMITIVE_MAP_COUNTS = [1, 0, 1, 2, 7, 25, 97, 397, 1691, 7439]  # 1..10 edges


def test_tutte_count():
    assert tutte_count(0) == 2
    assert tutte_count(3) == 6
    assert tutte_count(5) == 91
    assert maps_with_edges(1) == 1
    assert maps_with_edges(4) == 6


def test_a_prefix():
    ser = series(A_FORMULA, 8)
    assert [int(ser[n]) for n in range(9)] == A_PREFIX


def test_three_a_routes_agree():
    order = 15
    assert series(A_FORMULA, order) == series(A_ZEIL, order) == series(A_HYP, order)


def test_p_and_pprime_prefixes():
    'The substitution series keeps its boundary artifact at x^1'
    p = series(P, 6)
    assert [int(p[n]) for n in range(7)] == P_PREFIX
    pp = series(PPRIME, 6)
    assert [int(pp[n]) for n in range(7)] == PPRIME_PREFIX


def test_b_prefixes():
    for name, prefix in ((B1, B1_PREFIX), (B2, B2_PREFIX), (B3, B3_PREFIX)):
        ser = series(name, 10)
        assert [int(ser[n]) for n in range(1, 11)] == prefix
        assert ser[0] == 0


def test_primitive_map_counts():
    assert [primitive_maps_with_edges(m) for m in range(1, 11)] == PRIMITIVE_MAP_COUNTS
    for n in range(1, 10):
        assert p_coefficient(n) == PRIMITIVE_MAP_COUNTS[n] + PRIMITIVE_MAP_COUNTS[n - 1]


def test_zeilberger_cubic():
    'The cubic solution B satisfies 2 + xB = A'
    b = solve_equation(ZEILBERGER_CUBIC, 6)
    assert [int(b[n]) for n in range(7)] == [1, 2, 6, 22, 91, 408, 1938]


def test_b2_closed_form_equals_equation():
    order = 15
    eq = solve_equation(B2_EQUATION, order)
    assert eq == series(B2, order).truncate(order)


def test_b3_equation_residual_and_seed():
    sol = solve_equation(B3_EQUATION, 12)
    assert sol[0] == 0
    assert [int(sol[n]) for n in range(1, 11)] == B3_PREFIX


def test_degenerate_seed_rejected():
    from mapscope.series import EquationSpec

    # Q = y^2 - x has Qy = 0 at the seed
    spec = EquationSpec(coeffs=(((1, 0), Fraction(-1)), ((0, 2), Fraction(1))), seed=Fraction(0))
    with pytest.raises(ValueError):
        solve_equation(spec, 4)


def test_series_arithmetic():
    x = RationalSeries.x(10)
    one = RationalSeries.poly([1], 10)
    geo = one / (one - x)                      # 1/(1-x)
    assert [int(geo[n]) for n in range(5)] == [1, 1, 1, 1, 1]
    assert compose(x * geo, x / (one + x)) == x.truncate(10)


def test_sqrt_roundtrip():
    f = RationalSeries.poly([1, -2, -3], 12)
    s = sqrt_series(f, 12)
    assert (s * s).truncate(12) == f.truncate(12)
    assert s[1] == -1


def test_exact_coefficients_match_series():
    for name in (B1, B2, B3):
        ser = series(name, 12)
        for n in (3, 7, 12):
            assert exact_coefficient(name, n) == int(ser[n])
    assert exact_coefficient("A", 6) == 91
    assert exact_coefficient("A", 5) == 22
    assert exact_coefficient(P, 4) == 2
    assert exact_coefficient(P, 6) == 25


def test_singularity_constants():
    est = b3_singularity()
    assert abs(est.tau - 0.2852537875) < 1e-7
    assert abs(est.rho - 4.2412115430) < 1e-7
    assert abs(est.gamma - 0.1234545709) < 1e-7


def test_b1_estimate_tracks_coefficients():
    err = abs(asymptotic(B1, 200) / exact_coefficient(B1, 200) - 1)
    assert err < 0.005


def test_a_estimate_tracks_map_counts():
    err = abs(asymptotic("A", 400) / exact_coefficient("A", 400) - 1)
    assert err < 0.01


def test_p_estimate_overshoots_three_fold():
    'The printed constant for the primitive series is three times the empirical one'
    ratio = asymptotic(P, 400) / exact_coefficient(P, 400)
    assert abs(ratio - 3) < 0.1
