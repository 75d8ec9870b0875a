"""Text, LaTeX and JSON forms of coefficients, polynomials, series and Hecke polynomials.

JSON schema for a polynomial: a list of
``{"exponents": [e0, ..., en], "coeff": {"num": "...", "den": "..."}}``
in descending graded lex order; integers are written as exact strings.
"""

from __future__ import annotations

import json

from .coeffs import RatFuncP, parse_poly, poly_str
from .multipoly import MPoly, to_sym_basis
from .series import XSeries

__all__ = [
    "rf_json", "rf_from_json", "rf_latex",
    "mpoly_text", "mpoly_sym_text", "mpoly_latex", "mpoly_sym_latex",
    "mpoly_to_json", "mpoly_from_json",
    "series_text", "series_latex", "series_to_json", "series_from_json",
    "hecke_text", "hecke_latex", "hecke_to_json", "hecke_from_json",
    "dumps",
]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


# ---------------------------------------------------------------------------
# coefficients


def rf_json(c: RatFuncP) -> dict:
    return {"num": poly_str(c.num), "den": poly_str(c.den)}


def rf_from_json(d: dict) -> RatFuncP:
    return RatFuncP(parse_poly(d["num"]), parse_poly(d["den"]))


def _poly_latex(a) -> str:
    s = poly_str(a)
    out = []
    for tok in s.split(" "):
        if "p^" in tok:
            coef, _, e = tok.partition("p^")
            tok = f"{coef.rstrip('*')}p^{{{e}}}"
        out.append(tok.replace("*", ""))
    return " ".join(out)


def rf_latex(c: RatFuncP, wrap: bool = False) -> str:
    if c.den == (1,):
        body = _poly_latex(c.num)
        if wrap and len([v for v in c.num if v]) > 1:
            return f"\\left({body}\\right)"
        return body
    return f"\\frac{{{_poly_latex(c.num)}}}{{{_poly_latex(c.den)}}}"


def _split_sign(c: RatFuncP):
    if c.num and c.num[-1] < 0:
        return "-", -c
    return "+", c


def _join(parts) -> str:
    """``parts`` are (sign, body) pairs."""
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _coef_text(c: RatFuncP, has_factor: bool) -> str:
    s = str(c)
    if not has_factor:
        return s
    if c.is_one():
        return ""
    if len([v for v in c.num if v]) > 1 and c.den == (1,):
        s = f"({s})"
    return s + "*"


# ---------------------------------------------------------------------------
# polynomials


def _mono_text(e) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i}")
        elif k > 1:
            parts.append(f"x{i}^{k}")
    return "*".join(parts)


def _mono_latex(e) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x_{i}")
        elif k > 1:
            parts.append(f"x_{i}^{{{k}}}")
    return " ".join(parts)


def mpoly_text(poly: MPoly) -> str:
    parts = []
    for e, c in poly.items():
        sign, c = _split_sign(c)
        m = _mono_text(e)
        parts.append((sign, _coef_text(c, bool(m)) + m if m else str(c)))
    return _join(parts)


def mpoly_latex(poly: MPoly) -> str:
    parts = []
    for e, c in poly.items():
        sign, c = _split_sign(c)
        m = _mono_latex(e)
        if not m:
            parts.append((sign, rf_latex(c)))
        elif c.is_one():
            parts.append((sign, m))
        else:
            parts.append((sign, f"{rf_latex(c, wrap=True)}\\, {m}"))
    return _join(parts)


def _sym_groups(poly: MPoly):
    groups: dict[int, list] = {}
    for (d, lam), c in to_sym_basis(poly).items():
        groups.setdefault(d, []).append((lam, c))
    return sorted(groups.items())


def mpoly_sym_text(poly: MPoly) -> str:
    """Symmetric polynomial written with ``sym[i1,i2,i3]`` and powers of x0."""
    if poly.is_zero():
        return "0"
    out = []
    for d, terms in _sym_groups(poly):
        parts = []
        for lam, c in terms:
            sign, c = _split_sign(c)
            name = "sym[" + ",".join(map(str, lam)) + "]"
            if not any(lam):
                parts.append((sign, str(c)))
            else:
                parts.append((sign, _coef_text(c, True) + name))
        body = _join(parts)
        if d == 0:
            out.append(("+", f"({body})" if len(parts) > 1 else body))
        else:
            x0 = "x0" if d == 1 else f"x0^{d}"
            out.append(("+", f"({body})*{x0}"))
    return _join(out)


def mpoly_sym_latex(poly: MPoly) -> str:
    if poly.is_zero():
        return "0"
    out = []
    for d, terms in _sym_groups(poly):
        parts = []
        for lam, c in terms:
            sign, c = _split_sign(c)
            name = "sym_{" + ",".join(map(str, lam)) + "}"
            if not any(lam):
                parts.append((sign, rf_latex(c)))
            elif c.is_one():
                parts.append((sign, name))
            else:
                parts.append((sign, f"{rf_latex(c, wrap=True)}\\, {name}"))
        body = _join(parts)
        if d == 0:
            out.append(("+", body if len(parts) == 1 else f"\\left({body}\\right)"))
        else:
            x0 = "x_0" if d == 1 else f"x_0^{{{d}}}"
            out.append(("+", f"\\left({body}\\right) {x0}"))
    return _join(out)


def mpoly_to_json(poly: MPoly) -> list:
    return [{"exponents": list(e), "coeff": rf_json(c)} for e, c in poly.items()]


def mpoly_from_json(data: list, nvars: int | None = None) -> MPoly:
    if nvars is None:
        if not data:
            raise ValueError("cannot infer the variable count of an empty polynomial")
        nvars = len(data[0]["exponents"]) - 1
    return MPoly(nvars, {tuple(t["exponents"]): rf_from_json(t["coeff"]) for t in data})


# ---------------------------------------------------------------------------
# series


def series_text(s: XSeries, sym: bool = False) -> str:
    fmt = mpoly_sym_text if sym else mpoly_text
    lines = []
    for k, c in enumerate(s.coeffs):
        if not c.is_zero():
            lines.append(f"X^{k}: {fmt(c)}")
    return "\n".join(lines) if lines else "0"


def series_latex(s: XSeries, sym: bool = True) -> str:
    fmt = mpoly_sym_latex if sym else mpoly_latex
    parts = []
    for k, c in enumerate(s.coeffs):
        if c.is_zero():
            continue
        x = "" if k == 0 else ("X" if k == 1 else f"X^{{{k}}}")
        body = fmt(c)
        parts.append(body if not x else f"\\left({body}\\right) {x}")
    return " + ".join(parts) if parts else "0"


def series_to_json(s: XSeries) -> dict:
    return {"nvars": s.nvars, "order": s.order, "coeffs": [mpoly_to_json(c) for c in s.coeffs]}


def series_from_json(d: dict) -> XSeries:
    n = d["nvars"]
    return XSeries(n, d["order"], [mpoly_from_json(c, n) for c in d["coeffs"]])


# ---------------------------------------------------------------------------
# Hecke polynomials


def _gen_text(i: int, genus: int) -> str:
    if i == 0:
        return "T(p)"
    if i == genus:
        return f"[p]_{genus}"
    return f"T_{i}(p^2)"


def _gen_latex(i: int, genus: int) -> str:
    if i == 0:
        return "\\mathbf{T}(p)"
    if i == genus:
        return f"[\\mathbf{{p}}]_{{{genus}}}"
    return f"\\mathbf{{T}}_{{{i}}}(p^2)"


def _hecke_mono(mono, genus, latex):
    parts = []
    for i, k in enumerate(mono):
        if k:
            g = _gen_latex(i, genus) if latex else _gen_text(i, genus)
            parts.append(g if k == 1 else (f"{g}^{{{k}}}" if latex else f"{g}^{k}"))
    return (" " if latex else "*").join(parts)


def hecke_text(h) -> str:
    parts = []
    for k, layer in enumerate(h.coeffs):
        x = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
        for mono in sorted(layer, reverse=True):
            sign, c = _split_sign(layer[mono])
            m = "*".join(s for s in (_hecke_mono(mono, h.genus, False), x) if s)
            parts.append((sign, _coef_text(c, bool(m)) + m if m else str(c)))
    return _join(parts)


def hecke_latex(h) -> str:
    parts = []
    for k, layer in enumerate(h.coeffs):
        x = "" if k == 0 else ("X" if k == 1 else f"X^{{{k}}}")
        for mono in sorted(layer, reverse=True):
            sign, c = _split_sign(layer[mono])
            m = " ".join(s for s in (_hecke_mono(mono, h.genus, True), x) if s)
            if not m:
                parts.append((sign, rf_latex(c)))
            elif c.is_one():
                parts.append((sign, m))
            else:
                parts.append((sign, f"{rf_latex(c, wrap=True)}\\, {m}"))
    return _join(parts)


def hecke_to_json(h) -> dict:
    return {
        "genus": h.genus,
        "generators": [_gen_text(i, h.genus) for i in range(h.genus + 1)],
        "coeffs": [
            [{"monomial": list(m), "coeff": rf_json(layer[m])} for m in sorted(layer, reverse=True)]
            for layer in h.coeffs
        ],
    }


def hecke_from_json(d: dict):
    from .hecke_expr import HeckePoly

    layers = [{tuple(t["monomial"]): rf_from_json(t["coeff"]) for t in layer} for layer in d["coeffs"]]
    return HeckePoly(d["genus"], layers)
