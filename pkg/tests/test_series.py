import pytest

from spherical_hecke.coeffs import P
from spherical_hecke.multipoly import MPoly
from spherical_hecke.series import XSeries, series_arith, series_inv


def geometric(n=1, order=6):
    # 1 - x1*X
    return XSeries(n, order, [MPoly.const(n, 1), -MPoly.var(n, 1)])


def test_inverse_of_linear_factor_is_geometric():
    inv = series_inv(geometric())
    for k in range(7):
        assert inv[k] == MPoly.var(1, 1) ** k


def test_inverse_times_self_is_one():
    s = XSeries(2, 8, [MPoly.const(2, 1), MPoly.var(2, 1).scale(P), MPoly.var(2, 0) * MPoly.var(2, 2)])
    assert series_arith(s, series_inv(s), "mul") == XSeries.one(2, 8)


def test_product_truncates_to_smaller_order():
    a = XSeries(1, 3, [MPoly.const(1, 1)] * 4)
    b = XSeries(1, 5, [MPoly.const(1, 1)] * 6)
    c = a * b
    assert c.order == 3
    assert [c[k].constant_value() for k in range(4)] == [1, 2, 3, 4]


def test_inverse_needs_unit_constant():
    with pytest.raises(ValueError):
        series_inv(XSeries(1, 3, [MPoly.const(1, 2)]))


def test_first_mismatch():
    a = geometric()
    b = XSeries(1, 6, [MPoly.const(1, 1), -MPoly.var(1, 1), MPoly.var(1, 1)])
    assert a.first_mismatch(a) is None
    assert a.first_mismatch(b) == 2
    assert b.degree() == 2
