import random

import pytest

from spherical_hecke.coeffs import ONE, P, RatFuncP
from spherical_hecke.multipoly import (
    MAX_EXPONENT,
    MPoly,
    SymmetryError,
    elem_sym,
    from_sym_basis,
    normalize_partition,
    nu_assignment,
    substitute,
    sym_genfun,
    sym_orbit,
    to_sym_basis,
)


def x(i, n=3):
    return MPoly.var(n, i)


def test_sym_examples():
    assert sym_orbit((0, 0, 0), 3) == MPoly.const(3, 1)
    assert sym_orbit((1,), 3) == x(1) + x(2) + x(3)
    assert sym_orbit((1, 1), 3) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3)
    assert sym_orbit((1, 1, 1), 3) == x(1) * x(2) * x(3)
    assert len(sym_orbit((4, 3, 2), 3)) == 6
    assert len(sym_orbit((2, 2, 1), 3)) == 3


def test_sym_genfun_small():
    assert sym_genfun((2, 1), 3) == sym_orbit((2, 1, 0), 3)
    assert sym_genfun((3, 3, 3), 3) == sym_orbit((3, 3, 3), 3)


def test_partition_validation():
    assert normalize_partition((2, 1), 3) == (2, 1, 0)
    with pytest.raises(ValueError):
        normalize_partition((1, 2), 3)
    with pytest.raises(ValueError):
        normalize_partition((1, 1, 1, 1), 3)


def test_elementary_symmetric():
    assert elem_sym(0, 3) == MPoly.const(3, 1)
    assert elem_sym(2, 3) == sym_orbit((1, 1), 3)
    with pytest.raises(ValueError):
        elem_sym(4, 3)


def test_arithmetic():
    a = x(1) + x(2)
    assert a * a == x(1) ** 2 + x(2) ** 2 + (x(1) * x(2)).scale(2)
    assert a - a == MPoly.zero(3)
    assert (a ** 3).total_degree() == 3
    assert a.scale_p(-1) == a.scale(RatFuncP.p_power(-1))


def test_exact_divide():
    a = x(2) - x(1).scale(RatFuncP.p_power(-1))
    b = x(3) + x(1) * x(2) + MPoly.const(3, P)
    assert (a * b).exact_divide(a) == b
    with pytest.raises(ArithmeticError):
        (a * b + x(3)).exact_divide(a)


def test_permutation_and_symmetry_violation():
    f = x(1) ** 2 * x(2)
    assert f.swap(1, 2) == x(2) ** 2 * x(1)
    assert f.symmetry_violation() is not None
    with pytest.raises(SymmetryError) as exc:
        to_sym_basis(f)
    assert exc.value.transposition in [(1, 2), (2, 3)]


def test_sym_basis_keeps_x0_degree():
    f = sym_orbit((2, 1, 1), 3, x0_degree=2).scale(P) + MPoly.const(3, 1)
    basis = to_sym_basis(f)
    assert basis == {(2, (2, 1, 1)): P, (0, (0, 0, 0)): ONE}


def test_sym_basis_round_trip_random():
    rng = random.Random(7)
    for _ in range(20):
        basis = {}
        for _ in range(rng.randint(1, 5)):
            lam = tuple(sorted((rng.randint(0, 3) for _ in range(3)), reverse=True))
            basis[(rng.randint(0, 2), lam)] = RatFuncP((rng.randint(-4, 4), rng.randint(-2, 2)), (0, 0, 1))
        f = from_sym_basis(basis, 3)
        assert from_sym_basis(to_sym_basis(f), 3) == f


def test_nu_substitution():
    f = sym_orbit((1, 1, 1), 3, x0_degree=2)
    g = substitute(f, nu_assignment(3))
    assert g.constant_value() == P**6
    with pytest.raises(KeyError):
        substitute(f, {0: ONE})


def test_polynomial_substitution():
    f = x(1) * x(2)
    g = substitute(f, {1: x(1) + x(2), 2: x(1) - x(2)}, nvars=3)
    assert g == x(1) ** 2 - x(2) ** 2


def test_exponent_overflow_guard():
    with pytest.raises(OverflowError):
        MPoly.monomial((0, MAX_EXPONENT + 1, 0, 0))


def test_output_order_is_graded_descending():
    f = MPoly.const(3, 1) + x(1) + x(3) ** 2
    assert [e for e, _ in f.items()] == [(0, 0, 0, 2), (0, 1, 0, 0), (0, 0, 0, 0)]
