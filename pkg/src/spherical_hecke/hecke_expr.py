"""Polynomials in X over the Hecke generators of Sp_g and their Omega-images.

A generator monomial is an exponent tuple over ``(T(p), T_1(p^2), ..., T_g(p^2))``;
the last generator is the scalar operator ``[p]_g``.  Identities between
Hecke elements are checked on their images, which are explicit polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .coeffs import ONE, ZERO, RatFuncP
from .linalg import bareiss_solve
from .multipoly import MPoly, SymmetryError, to_sym_basis
from .series import XSeries
from . import sp_spherical as sp

__all__ = [
    "HeckePoly",
    "AnsatzSolution",
    "generator_names",
    "omega_monomial",
    "omega_image",
    "E_explicit",
    "F_explicit",
    "paper_template",
    "auto_template",
    "solve_ansatz",
    "ansatz_to_heckepoly",
    "functional_equation",
    "verify_shimura",
]


def generator_names(genus: int) -> tuple:
    return ("Tp",) + tuple(f"T{i}p2" for i in range(1, genus + 1))


class HeckePoly:
    """``sum_k X^k * sum_m c_{k,m} * m`` with generator monomials ``m``."""

    __slots__ = ("genus", "coeffs")

    def __init__(self, genus: int, coeffs=None):
        self.genus = genus
        self.coeffs: list[dict[tuple, RatFuncP]] = []
        for k, layer in enumerate(coeffs or []):
            clean = {}
            for mono, c in layer.items():
                mono = tuple(mono)
                if len(mono) != genus + 1:
                    raise ValueError(f"monomial {mono} does not fit genus {genus}")
                c = RatFuncP.coerce(c)
                if c.num:
                    clean[mono] = clean.get(mono, ZERO) + c
            self.coeffs.append({m: c for m, c in clean.items() if c.num})
        self._trim()

    def _trim(self):
        while self.coeffs and not self.coeffs[-1]:
            self.coeffs.pop()

    # construction ---------------------------------------------------------
    @classmethod
    def one(cls, genus: int) -> "HeckePoly":
        return cls(genus, [{(0,) * (genus + 1): ONE}])

    @classmethod
    def generator(cls, genus: int, index: int) -> "HeckePoly":
        mono = [0] * (genus + 1)
        mono[index] = 1
        return cls(genus, [{tuple(mono): ONE}])

    @classmethod
    def X(cls, genus: int) -> "HeckePoly":
        return cls(genus, [{}, {(0,) * (genus + 1): ONE}])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def layer(self, k: int) -> dict:
        return self.coeffs[k] if k < len(self.coeffs) else {}

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, HeckePoly):
            other = HeckePoly.one(self.genus) * other
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(n):
            layer = dict(self.layer(k))
            for m, c in other.layer(k).items():
                layer[m] = layer.get(m, ZERO) + c
            out.append(layer)
        return HeckePoly(self.genus, out)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, HeckePoly):
            c = RatFuncP.coerce(other)
            return HeckePoly(self.genus, [{m: v * c for m, v in layer.items()} for layer in self.coeffs])
        out = [dict() for _ in range(len(self.coeffs) + len(other.coeffs) - 1)] if self.coeffs and other.coeffs else []
        for i, la in enumerate(self.coeffs):
            for j, lb in enumerate(other.coeffs):
                tgt = out[i + j]
                for ma, ca in la.items():
                    for mb, cb in lb.items():
                        m = tuple(a + b for a, b in zip(ma, mb))
                        tgt[m] = tgt.get(m, ZERO) + ca * cb
        return HeckePoly(self.genus, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = HeckePoly.one(self.genus)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, HeckePoly):
            return NotImplemented
        return self.genus == other.genus and self.coeffs == other.coeffs

    def uses_generator(self, index: int) -> bool:
        return any(m[index] for layer in self.coeffs for m in layer)

    def __str__(self):
        from .emit import hecke_text

        return hecke_text(self)

    def __repr__(self):
        return f"HeckePoly(genus={self.genus}, degree={self.degree})"


def _gens(genus):
    return [HeckePoly.generator(genus, i) for i in range(genus + 1)]


# ---------------------------------------------------------------------------
# Omega images


@lru_cache(maxsize=None)
def _generator_image(genus: int, index: int) -> MPoly:
    if index == 0:
        return sp.omega_Tp(genus)
    if index == genus:
        return sp.omega_scalar(genus)
    return sp.omega_Ti_p2(index, genus)


@lru_cache(maxsize=None)
def _generator_power(genus: int, index: int, k: int) -> MPoly:
    if k == 0:
        return MPoly.const(genus, 1)
    return _generator_power(genus, index, k - 1) * _generator_image(genus, index)


@lru_cache(maxsize=None)
def omega_monomial(mono: tuple) -> MPoly:
    """Image of a generator monomial (exponents over T(p), T_1(p^2), ...)."""
    genus = len(mono) - 1
    out = MPoly.const(genus, 1)
    for i, k in enumerate(mono):
        if k:
            out = out * _generator_power(genus, i, k)
    return out


def omega_image(h: HeckePoly, order: int | None = None) -> XSeries:
    """Apply Omega coefficientwise in X."""
    layers = []
    for layer in h.coeffs:
        acc = MPoly.zero(h.genus)
        for mono, c in layer.items():
            acc = acc + omega_monomial(mono).scale(c)
        layers.append(acc)
    if not layers:
        layers = [MPoly.zero(h.genus)]
    deg = len(layers) - 1
    return XSeries(h.genus, deg if order is None else order, layers)


# ---------------------------------------------------------------------------
# explicit numerator and denominator


def E_explicit(genus: int = 3) -> HeckePoly:
    """Numerator ``E(X)`` of ``sum_delta T(p^delta) X^delta``."""
    p = RatFuncP.p_power(1)
    X = HeckePoly.X(genus)
    one = HeckePoly.one(genus)
    if genus == 1:
        return one
    if genus == 2:
        _, _, s = _gens(2)
        return one - s * X**2 * p**2
    if genus == 3:
        T, _, T2, s = _gens(3)
        inner = T2 + s * ((p * p - p + 1) * (p * p + p + 1))
        return (one
                - inner * X**2 * p**2
                + T * s * X**3 * ((p + 1) * p**4)
                - s * inner * X**4 * p**7
                + s**3 * X**6 * p**15)
    raise ValueError(f"no explicit numerator for genus {genus}")


def F_explicit(genus: int = 3) -> HeckePoly:
    """Denominator ``F(X)``, whose image is the spinor polynomial ``Q_g(X)``."""
    p = RatFuncP.p_power(1)
    X = HeckePoly.X(genus)
    one = HeckePoly.one(genus)
    if genus == 1:
        T, s = _gens(1)
        return one - T * X + s * X**2 * p
    if genus == 2:
        T, T1, s = _gens(2)
        return (one - T * X
                + (T1 * p + s * (p * (p * p + 1))) * X**2
                - s * T * X**3 * p**3
                + s**2 * X**4 * p**6)
    if genus == 3:
        T, T1, T2, s = _gens(3)
        q2 = T1 + T2 * (p * p + 1) + s * (p * p + 1) ** 2
        q3 = T * (T2 + s)
        q4 = (T1 * s * (-2 * p)
              + T2**2
              + T2 * s * (-2 * (p - 1))
              - s**2 * ((p * p + 2 * p - 1) * (p * p - p + 1) * (p * p + p + 1))
              + s * T**2)
        return (one - T * X
                + q2 * X**2 * p
                - q3 * X**3 * p**3
                + q4 * X**4 * p**6
                - s * q3 * X**5 * p**9
                + s**2 * q2 * X**6 * p**13
                - s**3 * T * X**7 * p**18
                + s**4 * X**8 * p**24)
    raise ValueError(f"no explicit denominator for genus {genus}")


# ---------------------------------------------------------------------------
# undetermined coefficients


_REFERENCE_TEMPLATE = {
    0: [("K_1", (0, 0, 0, 0))],
    1: [("K_Tp", (1, 0, 0, 0))],
    2: [("K_T1p2", (0, 1, 0, 0)), ("K_T2p2", (0, 0, 1, 0)),
        ("K_T3p2", (0, 0, 0, 1)), ("K_TpTp", (2, 0, 0, 0))],
    3: [("K_TpT1p2", (1, 1, 0, 0)), ("K_TpT2p2", (1, 0, 1, 0)),
        ("K_TpT3p2", (1, 0, 0, 1)), ("K_TpTpTp", (3, 0, 0, 0))],
    4: [("K_T1p2T1p2", (0, 2, 0, 0)), ("K_T1p2T2p2", (0, 1, 1, 0)),
        ("K_T1p2T3p2", (0, 1, 0, 1)), ("K_T2p2T2p2", (0, 0, 2, 0)),
        ("K_T2p2T3p2", (0, 0, 1, 1)), ("K_T3p2T3p2", (0, 0, 0, 2)),
        ("K_T1p2TpTp", (2, 1, 0, 0)), ("K_T2p2TpTp", (2, 0, 1, 0)),
        ("K_T3p2TpTp", (2, 0, 0, 1)), ("K_TpTpTpTp", (4, 0, 0, 0))],
}


def paper_template() -> dict[int, list[tuple[str, tuple]]]:
    """Generator monomials allowed at X^0 .. X^4 of the genus-3 denominator."""
    return {k: list(v) for k, v in _REFERENCE_TEMPLATE.items()}


def _monomial_name(mono, genus):
    names = generator_names(genus)
    parts = []
    for i, k in enumerate(mono):
        parts += [names[i]] * k
    return "K_" + ("".join(parts) or "1")


def auto_template(genus: int = 3, powers=range(0, 5)) -> dict[int, list[tuple[str, tuple]]]:
    """Every generator monomial whose image has x0-degree k, for each X^k.

    ``T(p)`` has x0-weight 1 and each ``T_i(p^2)`` weight 2.
    """
    out = {}
    for k in powers:
        entries = []
        for pairs in range(k // 2 + 1):
            a = k - 2 * pairs
            for combo in combinations_with_replacement(range(1, genus + 1), pairs):
                mono = [a] + [0] * genus
                for c in combo:
                    mono[c] += 1
                entries.append(tuple(mono))
        entries.sort(reverse=True)
        out[k] = [(_monomial_name(m, genus), m) for m in entries]
    return out


@dataclass
class AnsatzSolution:
    values: dict[str, RatFuncP] = field(default_factory=dict)
    status: str = "solved"
    residual: dict = field(default_factory=dict)
    free: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "solved"


def solve_ansatz(target: XSeries, template: dict[int, list[tuple[str, tuple]]]) -> AnsatzSolution:
    """Find the named coefficients so that, at every X^k in the template,
    ``sum_j K_j * Omega(m_j)`` equals the target coefficient.

    Both sides are compared in the monomial symmetric basis; the resulting
    (usually over-determined) system is solved exactly per X-power.
    """
    sol = AnsatzSolution()
    for k in sorted(template):
        entries = template[k]
        try:
            tgt = to_sym_basis(target[k])
        except SymmetryError as exc:
            sol.status = "inconsistent"
            sol.residual = {"power": k, "reason": str(exc)}
            return sol
        images = [to_sym_basis(omega_monomial(m)) for _, m in entries]
        coords = sorted(set(tgt).union(*[set(b) for b in images]),
                        key=lambda c: (c[0], sum(c[1]), c[1]), reverse=True)
        matrix = [[b.get(c, ZERO) for b in images] for c in coords]
        rhs = [tgt.get(c, ZERO) for c in coords]
        res = bareiss_solve(matrix, rhs)
        if res.status == "inconsistent":
            x0, lam = coords[res.inconsistent_row]
            sol.status = "inconsistent"
            sol.residual = {"power": k, "x0_degree": x0, "sym": list(lam)}
            return sol
        if res.status == "rank-deficient":
            sol.status = "rank-deficient"
            sol.free += [entries[c][0] for c in res.free_columns]
            continue
        for (name, _), v in zip(entries, res.solution):
            sol.values[name] = v
    return sol


def ansatz_to_heckepoly(sol: AnsatzSolution, template, genus: int = 3) -> HeckePoly:
    """Assemble ``sum_k sum_j K_j m_j X^k`` from a solved ansatz."""
    top = max(template)
    layers = [dict() for _ in range(top + 1)]
    for k, entries in template.items():
        for name, mono in entries:
            layers[k][mono] = sol.values[name]
    return HeckePoly(genus, layers)


def functional_equation(f: HeckePoly) -> HeckePoly:
    """Fill ``q_5 .. q_8`` from ``q_0 .. q_4`` by ``q_{8-i} = (p^6 [p]_3)^{4-i} q_i``."""
    if f.genus != 3:
        raise ValueError("the functional equation is implemented for genus 3")
    if f.degree > 8:
        raise ValueError("polynomial degree exceeds 8")
    s = HeckePoly.generator(3, 3)
    layers = [dict(f.layer(k)) for k in range(5)]
    for i in range(3, -1, -1):
        factor = (s * RatFuncP.p_power(6)) ** (4 - i)
        q_i = HeckePoly(3, [layers[i]])
        layers.append((factor * q_i).layer(0))
    return HeckePoly(3, layers)


# ---------------------------------------------------------------------------


def _numerator_target(genus: int, N: int) -> XSeries:
    if genus == 1:
        return XSeries.one(1, 0)
    if genus == 2:
        c2 = MPoly.monomial((2, 1, 1), RatFuncP.p_power(-1))
        return XSeries(2, 2, [MPoly.const(2, 1), MPoly.zero(2), -c2])
    return sp.P_poly(max(N, 2**genus - 2), genus)


def _series_mismatch(a: XSeries, b: XSeries, order: int):
    n = max(order, a.order, b.order)
    za = XSeries(a.nvars, n, a.coeffs)
    zb = XSeries(b.nvars, n, b.coeffs)
    return za.first_mismatch(zb)


def verify_shimura(genus: int, N: int) -> dict:
    """Check ``D(X) = E(X)/F(X)`` on images through ``X^N``.

    (i) Omega(F) = Q_g; (ii) Omega(E) = the numerator of R_g; (iii)
    R_g(X) * Omega(F) = Omega(E) through X^N.
    """
    if not 1 <= genus <= 3:
        raise ValueError("genus must be 1, 2 or 3")
    if N < 2**genus:
        raise ValueError(f"order must be at least {2**genus}")
    E, F = E_explicit(genus), F_explicit(genus)
    oE, oF = omega_image(E), omega_image(F)
    checks = []

    k = _series_mismatch(oF, sp.Q_poly(genus), 2**genus)
    checks.append({"check": f"Omega(F) = Q_{genus}", "status": "pass" if k is None else "fail",
                   "first_mismatch": k})
    try:
        num = _numerator_target(genus, N)
        k = _series_mismatch(oE, num, 2**genus - 2)
    except sp.VerificationError as exc:
        k = exc.index
    checks.append({"check": f"Omega(E) = numerator of R_{genus}",
                   "status": "pass" if k is None else "fail", "first_mismatch": k})

    lhs = sp.R_series(genus, N) * XSeries(genus, N, oF.coeffs)
    k = lhs.first_mismatch(XSeries(genus, N, oE.coeffs))
    checks.append({"check": f"R_{genus} * Omega(F) = Omega(E) through X^{N}",
                   "status": "pass" if k is None else "fail", "first_mismatch": k})
    return {"check": f"shimura genus={genus} order={N}",
            "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
            "details": checks}
