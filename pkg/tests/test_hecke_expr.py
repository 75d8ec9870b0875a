import pytest

from spherical_hecke.coeffs import ONE, P, RatFuncP
from spherical_hecke.fixtures import load_E3, load_F3, load_K_constants, load_omega_F, load_P3
from spherical_hecke.hecke_expr import (
    E_explicit,
    F_explicit,
    HeckePoly,
    ansatz_to_heckepoly,
    auto_template,
    functional_equation,
    omega_image,
    paper_template,
    solve_ansatz,
    verify_shimura,
)
from spherical_hecke.multipoly import MPoly
from spherical_hecke.series import XSeries
from spherical_hecke.sp_spherical import Q_poly, omega_generator

T = HeckePoly.generator(3, 0)
T1 = HeckePoly.generator(3, 1)
T2 = HeckePoly.generator(3, 2)
S = HeckePoly.generator(3, 3)
X = HeckePoly.X(3)


def test_omega_image_of_generators():
    assert omega_image(HeckePoly.one(3))[0] == MPoly.const(3, 1)
    assert omega_image(S)[0] == MPoly.monomial((2, 1, 1, 1), RatFuncP.p_power(-6))
    assert omega_image(T2)[0] == omega_generator("T2p2", 3)


def test_omega_image_is_multiplicative():
    a = T * T2 + S
    b = T1 - T * T
    assert omega_image(a * b)[0] == omega_image(a)[0] * omega_image(b)[0]


def test_E_matches_transcription():
    E = E_explicit()
    assert E == load_E3()
    assert E.layer(1) == {}
    assert E.layer(3) == {(1, 0, 0, 1): (P + 1) * P**4}
    assert E.layer(6) == {(0, 0, 0, 3): P**15}
    assert not E.uses_generator(1)


def test_E_leading_term_formula():
    n = 3
    sign = (-1) ** (n - 1)
    exp = n * (n + 1) * 2 ** (n - 2) - n * n
    assert E_explicit().layer(2**n - 2) == {(0, 0, 0, 2 ** (n - 1) - 1): sign * P**exp}


def test_F_matches_transcription():
    F = F_explicit()
    assert F == load_F3()
    assert F.layer(1) == {(1, 0, 0, 0): -ONE}
    assert F.layer(7) == {(1, 0, 0, 3): -P**18}


def test_omega_F_is_Q3():
    assert omega_image(F_explicit()) == Q_poly(3) == load_omega_F()


def test_omega_E_is_P3():
    assert omega_image(E_explicit()) == load_P3()


def test_functional_equation():
    F = F_explicit()
    low = HeckePoly(3, [F.layer(k) for k in range(5)])
    assert functional_equation(low) == F
    assert functional_equation(HeckePoly.one(3)).layer(8) == {(0, 0, 0, 4): P**24}
    with pytest.raises(ValueError):
        functional_equation(X**9)


def test_reference_ansatz_reproduces_constants():
    sol = solve_ansatz(Q_poly(3), paper_template())
    assert sol.ok
    for name, value in load_K_constants().items():
        assert sol.values[name] == value, name


def test_ansatz_round_trip():
    template = paper_template()
    sol = solve_ansatz(Q_poly(3), template)
    h = ansatz_to_heckepoly(sol, template)
    assert omega_image(h).truncate(4) == Q_poly(3).truncate(4)


def test_trivial_solves():
    one = XSeries.one(3, 0)
    sol = solve_ansatz(one, {0: [("c", (0, 0, 0, 0))]})
    assert sol.ok and sol.values["c"] == ONE
    sol = solve_ansatz(Q_poly(3).truncate(1), {0: [("c", (0, 0, 0, 0))], 1: [("k", (1, 0, 0, 0))]})
    assert sol.values["k"] == -ONE


def test_solver_reports_inconsistency_and_free_unknowns():
    q = Q_poly(3).truncate(1)
    bad = solve_ansatz(q, {0: [("c", (0, 0, 0, 0))], 1: [("k", (0, 1, 0, 0))]})
    assert bad.status == "inconsistent" and bad.residual["power"] == 1
    dup = solve_ansatz(q, {0: [("c", (0, 0, 0, 0))], 1: [("a", (1, 0, 0, 0)), ("b", (1, 0, 0, 0))]})
    assert dup.status == "rank-deficient" and dup.free == ["b"]


def test_auto_template_contains_reference_template():
    auto = auto_template(3, range(5))
    for k, entries in paper_template().items():
        monos = {m for _, m in auto[k]}
        assert {m for _, m in entries} <= monos
    assert len(auto[2]) == 4


def test_auto_template_is_uniquely_solvable():
    template = auto_template(3, range(5))
    sol = solve_ansatz(Q_poly(3).truncate(4), template)
    assert sol.ok
    assert ansatz_to_heckepoly(sol, template) == HeckePoly(3, [F_explicit().layer(k) for k in range(5)])


@pytest.mark.parametrize("genus,order", [(1, 6), (2, 6), (3, 8)])
def test_verify_shimura(genus, order):
    rep = verify_shimura(genus, order)
    assert rep["status"] == "pass", rep


def test_verify_shimura_order_guard():
    with pytest.raises(ValueError):
        verify_shimura(3, 6)


def test_genus_two_polynomials():
    T_, T1_, S_ = (HeckePoly.generator(2, i) for i in range(3))
    X2 = HeckePoly.X(2)
    assert E_explicit(2) == HeckePoly.one(2) - S_ * X2**2 * P**2
    assert F_explicit(2).layer(4) == {(0, 0, 2): P**6}
