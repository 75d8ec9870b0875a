"""Regenerate the golden JSON fixtures from hand transcriptions.

Every entry below was typed in from the printed formulas, in the
``sym[i1,i2,i3]`` basis, and is expanded into the JSON polynomial schema
here.  Nothing in this script calls the formula engine; the fixtures are
meant to be an independent reference.

Usage: python3 scripts/build_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path

from spherical_hecke.coeffs import P, RatFuncP
from spherical_hecke.emit import hecke_to_json, mpoly_to_json, rf_json, series_to_json
from spherical_hecke.hecke_expr import HeckePoly
from spherical_hecke.multipoly import MPoly, from_sym_basis
from spherical_hecke.series import XSeries

OUT = Path(__file__).resolve().parents[1] / "src" / "spherical_hecke" / "fixtures"


def rf(expr: str) -> RatFuncP:
    return RatFuncP.coerce(eval(expr.replace("^", "**"), {"p": P}))


def sym_poly(terms, x0=0) -> MPoly:
    """``terms``: list of (partition string like "211", coefficient expression)."""
    basis = {}
    for lam, c in terms:
        key = (x0, tuple(int(ch) for ch in lam))
        basis[key] = basis.get(key, RatFuncP.from_int(0)) + rf(c)
    return from_sym_basis(basis, 3)


# omega(t(1, p^lam, p^mu)) for 0 <= lam <= mu <= 6, in table order
GL3_TABLE = [
    ((0, 0), [("000", "1")]),
    ((0, 1), [("100", "1/p")]),
    ((1, 1), [("110", "1/p^3")]),
    ((0, 2), [("110", "(p-1)/p^3"), ("200", "1/p^2")]),
    ((1, 2), [("111", "(2*p^2-p-1)/p^6"), ("210", "1/p^4")]),
    ((2, 2), [("211", "(p-1)/p^7"), ("220", "1/p^6")]),
    ((0, 3), [("111", "(p^2-2*p+1)/p^5"), ("210", "(p^2-p)/p^5"), ("300", "1/p^3")]),
    ((1, 3), [("211", "(2*p-2)/p^6"), ("220", "(p-1)/p^6"), ("310", "1/p^5")]),
    ((2, 3), [("221", "(2*p-2)/p^8"), ("311", "(p-1)/p^8"), ("320", "1/p^7")]),
    ((3, 3), [("222", "(p^2-2*p+1)/p^11"), ("321", "(p^2-p)/p^11"), ("330", "1/p^9")]),
    ((0, 4), [("211", "(p^2-2*p+1)/p^6"), ("220", "(p^2-p)/p^6"), ("310", "(p^2-p)/p^6"),
              ("400", "1/p^4")]),
    ((1, 4), [("221", "(2*p^2-3*p+1)/p^8"), ("311", "(2*p^2-2*p)/p^8"), ("320", "(p^2-p)/p^8"),
              ("410", "1/p^6")]),
    ((2, 4), [("222", "(-4*p^2+3*p^3+2*p-1)/p^11"), ("321", "(2*p^3-3*p^2+p)/p^11"),
              ("330", "(p^3-p^2)/p^11"), ("411", "(p^3-p^2)/p^11"), ("420", "1/p^8")]),
    ((3, 4), [("322", "(2*p^2-3*p+1)/p^12"), ("331", "(2*p^2-2*p)/p^12"),
              ("421", "(p^2-p)/p^12"), ("430", "1/p^10")]),
    ((4, 4), [("332", "(p^2-2*p+1)/p^14"), ("422", "(p^2-p)/p^14"), ("431", "(p^2-p)/p^14"),
              ("440", "1/p^12")]),
    ((0, 5), [("221", "(p^2-2*p+1)/p^7"), ("311", "(p^2-2*p+1)/p^7"), ("320", "(p^2-p)/p^7"),
              ("410", "(p^2-p)/p^7"), ("500", "1/p^5")]),
    ((1, 5), [("222", "(2*p^2-4*p+2)/p^9"), ("321", "(2*p^2-3*p+1)/p^9"),
              ("330", "(p^2-p)/p^9"), ("411", "(2*p^2-2*p)/p^9"), ("420", "(p^2-p)/p^9"),
              ("510", "1/p^7")]),
    ((2, 5), [("322", "(3*p^3-5*p^2+3*p-1)/p^12"), ("331", "(2*p^3-4*p^2+2*p)/p^12"),
              ("421", "(2*p^3-3*p^2+p)/p^12"), ("430", "(p^3-p^2)/p^12"),
              ("511", "(p^3-p^2)/p^12"), ("520", "1/p^9")]),
    ((3, 5), [("332", "(3*p^3-5*p^2+3*p-1)/p^14"), ("422", "(2*p^3-4*p^2+2*p)/p^14"),
              ("431", "(2*p^3-3*p^2+p)/p^14"), ("440", "(p^3-p^2)/p^14"),
              ("521", "(p^3-p^2)/p^14"), ("530", "1/p^11")]),
    ((4, 5), [("333", "(2*p^2-4*p+2)/p^15"), ("432", "(2*p^2-3*p+1)/p^15"),
              ("441", "(2*p^2-2*p)/p^15"), ("522", "(p^2-p)/p^15"), ("531", "(p^2-p)/p^15"),
              ("540", "1/p^13")]),
    ((5, 5), [("433", "(p^2-2*p+1)/p^17"), ("442", "(p^2-2*p+1)/p^17"),
              ("532", "(p^2-p)/p^17"), ("541", "(p^2-p)/p^17"), ("550", "1/p^15")]),
    ((0, 6), [("222", "(p^2-2*p+1)/p^8"), ("321", "(p^2-2*p+1)/p^8"), ("330", "(p^2-p)/p^8"),
              ("411", "(p^2-2*p+1)/p^8"), ("420", "(p^2-p)/p^8"), ("510", "(p^2-p)/p^8"),
              ("600", "1/p^6")]),
    ((1, 6), [("322", "(2*p^2-4*p+2)/p^10"), ("331", "(2*p^2-3*p+1)/p^10"),
              ("421", "(2*p^2-3*p+1)/p^10"), ("430", "(p^2-p)/p^10"),
              ("511", "(2*p^2-2*p)/p^10"), ("520", "(p^2-p)/p^10"), ("610", "1/p^8")]),
    ((2, 6), [("332", "(3*p^3-6*p^2+4*p-1)/p^13"), ("422", "(3*p^3-5*p^2+3*p-1)/p^13"),
              ("431", "(2*p^3-4*p^2+2*p)/p^13"), ("440", "(p^3-p^2)/p^13"),
              ("521", "(2*p^3-3*p^2+p)/p^13"), ("530", "(p^3-p^2)/p^13"),
              ("611", "(p^3-p^2)/p^13"), ("620", "1/p^10")]),
    ((3, 6), [("333", "(4*p^3-7*p^2+5*p-2)/p^15"), ("432", "(3*p^3-6*p^2+4*p-1)/p^15"),
              ("441", "(2*p^3-4*p^2+2*p)/p^15"), ("522", "(2*p^3-4*p^2+2*p)/p^15"),
              ("531", "(2*p^3-3*p^2+p)/p^15"), ("540", "(p^3-p^2)/p^15"),
              ("621", "(p^3-p^2)/p^15"), ("630", "1/p^12")]),
    ((4, 6), [("433", "(3*p^3-6*p^2+4*p-1)/p^17"), ("442", "(3*p^3-5*p^2+3*p-1)/p^17"),
              ("532", "(2*p^3-4*p^2+2*p)/p^17"), ("541", "(2*p^3-3*p^2+p)/p^17"),
              ("550", "(p^3-p^2)/p^17"), ("622", "(p^3-p^2)/p^17"),
              ("631", "(p^3-p^2)/p^17"), ("640", "1/p^14")]),
    ((5, 6), [("443", "(2*p^2-4*p+2)/p^18"), ("533", "(2*p^2-3*p+1)/p^18"),
              ("542", "(2*p^2-3*p+1)/p^18"), ("551", "(2*p^2-2*p)/p^18"),
              ("632", "(p^2-p)/p^18"), ("641", "(p^2-p)/p^18"), ("650", "1/p^16")]),
    ((6, 6), [("444", "(p^2-2*p+1)/p^20"), ("543", "(p^2-2*p+1)/p^20"),
              ("552", "(p^2-2*p+1)/p^20"), ("633", "(p^2-p)/p^20"), ("642", "(p^2-p)/p^20"),
              ("651", "(p^2-p)/p^20"), ("660", "1/p^18")]),
]

# genus-3 generator images, with their x0 degree
GENERATOR_IMAGES = {
    "Tp": (1, [("000", "1"), ("100", "1"), ("110", "1"), ("111", "1")]),
    "T1p2": (2, [("211", "(p^2-1)/p^3"), ("110", "(p^2-1)/p^3"),
                 ("221", "1/p"), ("210", "1/p"), ("100", "1/p"),
                 ("111", "(p-1)*(3*p^2+2*p+1)/p^4")]),
    "T2p2": (2, [("110", "1/p^3"), ("211", "1/p^3"), ("111", "(p-1)*(p^2+p+1)/p^6")]),
    "T3p2": (2, [("111", "1/p^6")]),
}

# numerator P_3(X): X power -> (x0 degree, terms)
P3_NUMERATOR = {
    0: (0, [("000", "1")]),
    2: (2, [("211", "-1/p"), ("111", "-(p^2+p+1)/p^2"), ("110", "-1/p")]),
    3: (3, [("222", "(p+1)/p^2"), ("221", "(p+1)/p^2"), ("211", "(p+1)/p^2"),
            ("111", "(p+1)/p^2")]),
    4: (4, [("322", "-1/p^2"), ("222", "-(p^2+p+1)/p^3"), ("221", "-1/p^2")]),
    6: (6, [("333", "1/p^3")]),
}

# image of the denominator in the sym basis (integer coefficients)
OMEGA_F = {
    0: [("000", 1)],
    1: [("111", -1), ("110", -1), ("100", -1), ("000", -1)],
    2: [("111", 4), ("100", 1), ("211", 2), ("110", 2), ("210", 1), ("221", 1)],
    3: [("311", -1), ("110", -1), ("221", -4), ("111", -4), ("210", -1), ("220", -1),
        ("222", -4), ("322", -1), ("321", -1), ("211", -4)],
    4: [("311", 1), ("111", 1), ("331", 1), ("422", 1), ("211", 2), ("322", 4), ("321", 2),
        ("220", 1), ("222", 8), ("332", 2), ("333", 1), ("221", 4)],
    5: [("433", -1), ("432", -1), ("221", -1), ("222", -4), ("332", -4), ("331", -1),
        ("322", -4), ("333", -4), ("422", -1), ("321", -1)],
    6: [("332", 2), ("322", 1), ("433", 2), ("333", 4), ("432", 1), ("443", 1)],
    7: [("433", -1), ("333", -1), ("444", -1), ("443", -1)],
    8: [("444", 1)],
}

# generator monomials are exponents of (T(p), T_1(p^2), T_2(p^2), [p]_3)
E3 = {
    0: [((0, 0, 0, 0), "1")],
    2: [((0, 0, 1, 0), "-p^2"), ((0, 0, 0, 1), "-(p^6+p^4+p^2)")],
    3: [((1, 0, 0, 1), "p^5+p^4")],
    4: [((0, 0, 1, 1), "-p^7"), ((0, 0, 0, 2), "-(p^11+p^9+p^7)")],
    6: [((0, 0, 0, 3), "p^15")],
}

F3 = {
    0: [((0, 0, 0, 0), "1")],
    1: [((1, 0, 0, 0), "-1")],
    2: [((0, 1, 0, 0), "p"), ((0, 0, 1, 0), "p^3+p"), ((0, 0, 0, 1), "p^5+2*p^3+p")],
    3: [((1, 0, 1, 0), "-p^3"), ((1, 0, 0, 1), "-p^3")],
    4: [((0, 1, 0, 1), "-2*p^7"), ((0, 0, 2, 0), "p^6"), ((0, 0, 1, 1), "-2*p^7+2*p^6"),
        ((0, 0, 0, 2), "-p^12-2*p^11-2*p^9-2*p^7+p^6"), ((2, 0, 0, 1), "p^6")],
    5: [((1, 0, 1, 1), "-p^9"), ((1, 0, 0, 2), "-p^9")],
    6: [((0, 1, 0, 2), "p^13"), ((0, 0, 1, 2), "p^15+p^13"), ((0, 0, 0, 3), "p^17+2*p^15+p^13")],
    7: [((1, 0, 0, 3), "-p^18")],
    8: [((0, 0, 0, 4), "p^24")],
}

K_CONSTANTS = {
    "K_TpT1p2": "0", "K_TpTpTp": "0", "K_TpT2p2": "-p^3", "K_TpT3p2": "-p^3",
    "K_T2p2": "p^3+p", "K_T3p2": "p*(1+p^2)^2", "K_T1p2": "p", "K_TpTp": "0",
    "K_T2p2TpTp": "0", "K_T1p2T3p2": "-2*p^7", "K_T2p2T3p2": "-2*p^7+2*p^6",
    "K_T1p2T1p2": "0", "K_T1p2T2p2": "0", "K_T2p2T2p2": "p^6", "K_T1p2TpTp": "0",
    "K_T3p2TpTp": "p^6", "K_TpTpTpTp": "0",
    "K_T3p2T3p2": "-p^6*(p^2+2*p-1)*(p^2-p+1)*(p^2+p+1)",
}

NU_EXPANSION = [
    "1",
    "0",
    "-(p^8+p^7+2*p^6+p^5+2*p^4+p^3+p^2)",
    "p^11+2*p^10+2*p^9+3*p^8+3*p^7+2*p^6+2*p^5+p^4",
    "-(p^13+p^12+2*p^11+p^10+2*p^9+p^8+p^7)",
    "0",
    "p^15",
]


def _series(table, order, x0_of=lambda k, entry: entry[0], terms_of=lambda entry: entry[1]):
    coeffs = [MPoly.zero(3) for _ in range(order + 1)]
    for k, entry in table.items():
        coeffs[k] = sym_poly(terms_of(entry), x0_of(k, entry))
    return XSeries(3, order, coeffs)


def _hecke(table, degree):
    layers = [{} for _ in range(degree + 1)]
    for k, terms in table.items():
        for mono, c in terms:
            layers[k][mono] = rf(c)
    return HeckePoly(3, layers)


def build() -> dict[str, object]:
    docs = {}
    docs["omega_gl3_table.json"] = {
        "description": "omega(t(1,p^lambda,p^mu)) for 0 <= lambda <= mu <= 6, variables x0..x3",
        "entries": [
            {"item": i + 1, "lambda": lm[0], "mu": lm[1],
             "sym": [{"partition": [int(ch) for ch in lam], "coeff": rf_json(rf(c))} for lam, c in terms],
             "poly": mpoly_to_json(sym_poly(terms))}
            for i, (lm, terms) in enumerate(GL3_TABLE)
        ],
    }
    docs["generator_images.json"] = {
        "description": "genus-3 images of T(p), T_1(p^2), T_2(p^2), T_3(p^2)",
        "images": {tag: mpoly_to_json(sym_poly(terms, d)) for tag, (d, terms) in GENERATOR_IMAGES.items()},
    }
    docs["P3_numerator.json"] = {
        "description": "numerator polynomial P_3(X) in the Satake parameters",
        "series": series_to_json(_series(P3_NUMERATOR, 6)),
    }
    docs["omega_F.json"] = {
        "description": "image of the genus-3 denominator F(X), i.e. Q_3(X), in the sym basis",
        "series": series_to_json(_series(OMEGA_F, 8, x0_of=lambda k, e: k,
                                         terms_of=lambda e: [(lam, str(c)) for lam, c in e])),
    }
    docs["E3.json"] = {"description": "genus-3 numerator E(X)", "hecke": hecke_to_json(_hecke(E3, 6))}
    docs["F3.json"] = {"description": "genus-3 denominator F(X)", "hecke": hecke_to_json(_hecke(F3, 8))}
    docs["K_constants.json"] = {
        "description": "undetermined coefficients of the genus-3 denominator ansatz",
        "values": {k: rf_json(rf(v)) for k, v in K_CONSTANTS.items()},
    }
    docs["nu_expansion.json"] = {
        "description": "P_3(1, p, p^2, p^3, X) coefficients of X^0 .. X^6",
        "coeffs": [rf_json(rf(c)) for c in NU_EXPANSION],
    }
    return docs


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for name, doc in build().items():
        (OUT / name).write_text(json.dumps(doc, indent=2) + "\n")
        print(f"wrote {OUT / name}")


if __name__ == "__main__":
    main()
