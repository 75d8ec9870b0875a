import pytest

from spherical_hecke.coeffs import P, RatFuncP
from spherical_hecke.fixtures import load_generator_images, load_P3
from spherical_hecke.multipoly import MPoly, sym_orbit
from spherical_hecke.series import XSeries
from spherical_hecke.sp_spherical import (
    P_poly,
    Q_poly,
    R_series,
    VerificationError,
    count_invertible_symmetric,
    count_symmetric_by_rank,
    nu_check,
    nu_product,
    omega_generator,
    omega_scalar,
    omega_Ti_p2,
    omega_Tp,
    phi,
    sm,
    sm_anchor,
    sm_count_check,
)


def test_phi():
    assert phi(0)(5) == 1
    assert phi(2)(2) == (2 - 1) * (4 - 1)


def test_sm_closed_values():
    assert sm(1, 3) == (P - 1) * (P * P + P + 1)
    assert sm(0, 3) == RatFuncP.from_int(1)
    assert sm(2, 2) == P**3 - P**2
    assert sm(3, 3) == P**6 - P**5 - P**3 + P**2


def test_symmetric_matrix_counts_by_hand():
    # 2x2 symmetric over F_3: 27 matrices, 1 zero, 8 singular rank one, 18 invertible
    assert count_symmetric_by_rank(2, 3) == {0: 1, 1: 8, 2: 18}
    assert count_invertible_symmetric(1, 5) == 4


def test_sm_anchor_interpolation_degree():
    assert sm_anchor(3).degree == 6


def test_sm_count_check_odd_primes():
    rows = sm_count_check(primes=(3, 5), extra=())
    assert rows and all(r["status"] == "pass" for r in rows)


def test_sm_count_check_characteristic_two_is_reported():
    rows = sm_count_check(primes=(), extra=(2,))
    assert {r["status"] for r in rows} <= {"match", "mismatch"}


def test_omega_Tp():
    assert omega_Tp(1) == MPoly.var(1, 0) + MPoly.var(1, 0) * MPoly.var(1, 1)
    assert omega_Tp(3) == load_generator_images()["Tp"]


@pytest.mark.parametrize("tag", ["T1p2", "T2p2", "T3p2"])
def test_generator_images_match_fixture(tag):
    assert omega_generator(tag, 3) == load_generator_images()[tag]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_top_generator_is_scalar(n):
    assert omega_Ti_p2(n, n) == omega_scalar(n)


def test_scalar_image():
    assert omega_scalar(3) == sym_orbit((1, 1, 1), 3, x0_degree=2).scale(RatFuncP.p_power(-6))
    with pytest.raises(ValueError):
        omega_generator("Tx", 3)


def test_R_coefficients_are_symmetric():
    R = R_series(3, 4)
    assert all(R[k].is_symmetric() for k in range(5))


def test_R_times_Q_genus_one_and_two():
    one = R_series(1, 6) * XSeries(1, 6, Q_poly(1).coeffs)
    assert one == XSeries.one(1, 6)
    two = R_series(2, 6) * XSeries(2, 6, Q_poly(2).coeffs)
    expected = XSeries(2, 6, [MPoly.const(2, 1), MPoly.zero(2),
                              -MPoly.monomial((2, 1, 1), RatFuncP.p_power(-1))])
    assert two == expected


def test_reduction_identity():
    # R_3 (1 - x0 X)(1 - x0 x1 x2 x3 X) is the part with the inner six factors removed
    R = R_series(3, 6)
    outer = XSeries(3, 6, [MPoly.const(3, 1), -MPoly.var(3, 0)]) * \
        XSeries(3, 6, [MPoly.const(3, 1), -MPoly.monomial((1, 1, 1, 1))])
    inner = XSeries.one(3, 6)
    for e in [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1)]:
        inner = inner * XSeries(3, 6, [MPoly.const(3, 1), -MPoly.monomial(e)])
    assert (R * outer * inner).truncate(6) == load_P3().truncate(6)


def test_P_poly_matches_fixture_and_vanishing_coefficients():
    P3 = P_poly(12)
    assert P3 == load_P3()
    assert P3[1].is_zero() and P3[5].is_zero()


def test_P_poly_order_guard():
    with pytest.raises(ValueError):
        P_poly(4)
    assert issubclass(VerificationError, AssertionError)


def test_Q_poly_degree():
    assert Q_poly(3).degree() == 8
    assert Q_poly(3)[8] == MPoly.monomial((8, 4, 4, 4))


def test_nu_check():
    rep = nu_check()
    assert rep["status"] == "pass"
    assert rep["coefficients"][6] == "p^15"


def test_nu_check_reports_mismatch():
    bad = [RatFuncP.from_int(1), RatFuncP.from_int(0), RatFuncP.from_int(0)]
    rep = nu_check(expected=bad)
    assert rep["status"] == "fail"
    assert rep["details"][0]["first_mismatch"]["index"] == 2


def test_nu_product_degree():
    assert len(nu_product()) == 7
