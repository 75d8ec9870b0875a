import json

from spherical_hecke import emit
from spherical_hecke.coeffs import P, RatFuncP
from spherical_hecke.gl_spherical import omega_t_closed
from spherical_hecke.hecke_expr import E_explicit, F_explicit
from spherical_hecke.multipoly import MPoly
from spherical_hecke.sp_spherical import P_poly, omega_generator


def test_coefficient_json_uses_strings():
    c = (P - 1) / P**3
    assert emit.rf_json(c) == {"num": "p - 1", "den": "p^3"}
    assert emit.rf_from_json(emit.rf_json(c)) == c


def test_mpoly_json_round_trip_is_byte_identical():
    for poly in [omega_t_closed(2, 4), omega_generator("T1p2", 3), MPoly.const(3, RatFuncP((1,), (3,)))]:
        text = emit.dumps(emit.mpoly_to_json(poly))
        again = emit.dumps(emit.mpoly_to_json(emit.mpoly_from_json(json.loads(text))))
        assert text == again


def test_series_and_hecke_json_round_trip():
    s = P_poly(12)
    text = emit.dumps(emit.series_to_json(s))
    assert emit.dumps(emit.series_to_json(emit.series_from_json(json.loads(text)))) == text
    h = F_explicit()
    text = emit.dumps(emit.hecke_to_json(h))
    assert emit.hecke_from_json(json.loads(text)) == h
    assert emit.dumps(emit.hecke_to_json(emit.hecke_from_json(json.loads(text)))) == text


def test_plain_text():
    f = MPoly.var(3, 1) * MPoly.var(3, 2) - MPoly.const(3, P)
    assert emit.mpoly_text(f) == "x1*x2 - p"
    assert str(f) == "x1*x2 - p"


def test_sym_text_and_latex():
    poly = omega_t_closed(1, 2)
    assert emit.mpoly_sym_text(poly) == "(1/p^4*sym[2,1,0] + (2*p^2 - p - 1)/p^6*sym[1,1,1])"
    latex = emit.mpoly_sym_latex(poly)
    assert "\\frac{2p^{2} - p - 1}{p^{6}}\\, sym_{1,1,1}" in latex
    assert "\\frac{1}{p^{4}}\\, sym_{2,1,0}" in latex


def test_hecke_text_uses_operator_notation():
    text = emit.hecke_text(E_explicit())
    assert text.startswith("1 - p^2*T_2(p^2)*X^2")
    assert "(p^5 + p^4)*T(p)*[p]_3*X^3" in text
    assert text.endswith("p^15*[p]_3^3*X^6")
    latex = emit.hecke_latex(F_explicit())
    assert "\\mathbf{T}(p) X" in latex and "[\\mathbf{p}]_{3}^{4} X^{8}" in latex


def test_series_text_lists_nonzero_powers():
    lines = emit.series_text(P_poly(12), sym=True).splitlines()
    assert [ln.split(":")[0] for ln in lines] == ["X^0", "X^2", "X^3", "X^4", "X^6"]
