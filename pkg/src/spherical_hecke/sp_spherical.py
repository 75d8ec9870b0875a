"""The spherical map for the local Hecke ring of Sp_n, n <= 3.

Images of the generators ``T(p)``, ``T_i(p^2)`` and of the scalar operator
``[p]_n``, the generating series ``R_n(X) = sum_delta Omega(T(p^delta)) X^delta``,
the spinor polynomial ``Q_n(X)`` and the numerator ``P_3(X) = R_3(X) Q_3(X)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

import numpy as np

from .coeffs import ONE, IntPolyP, RatFuncP
from .gl_spherical import omega_gl
from .multipoly import MPoly, nu_assignment, substitute
from .series import XSeries

__all__ = [
    "VerificationError",
    "GENERATORS",
    "phi",
    "sm",
    "sm_anchor",
    "count_symmetric_by_rank",
    "count_invertible_symmetric",
    "sm_count_check",
    "omega_Tp",
    "omega_pi_ab",
    "omega_Ti_p2",
    "omega_scalar",
    "omega_generator",
    "R_series",
    "Q_poly",
    "numerator_series",
    "P_poly",
    "nu_specialize",
    "nu_check",
    "nu_product",
]

GENERATORS = ("Tp", "T1p2", "T2p2", "T3p2")


class VerificationError(AssertionError):
    """An identity that must hold exactly failed."""

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


# ---------------------------------------------------------------------------
# symmetric matrices over finite fields


def phi(r: int) -> IntPolyP:
    """``(p - 1)(p^2 - 1)...(p^r - 1)``; ``phi(0) = 1``."""
    if r < 0:
        raise ValueError("phi needs r >= 0")
    out = IntPolyP((1,))
    for k in range(1, r + 1):
        out = out * IntPolyP((-1,) + (0,) * (k - 1) + (1,))
    return out


def count_symmetric_by_rank(a: int, q: int) -> dict[int, int]:
    """Count symmetric ``a x a`` matrices over F_q by rank (a <= 3), exhaustively."""
    if not 0 <= a <= 3:
        raise ValueError("order must be between 0 and 3")
    if a == 0:
        return {0: 1}
    idx = [(i, j) for i in range(a) for j in range(i, a)]
    grids = np.meshgrid(*([np.arange(q, dtype=np.int64)] * len(idx)), indexing="ij")
    ent = {}
    for (i, j), g in zip(idx, grids):
        ent[(i, j)] = ent[(j, i)] = g.ravel()
    nonzero = np.zeros(q ** len(idx), dtype=bool)
    for g in grids:
        nonzero |= g.ravel() != 0
    if a == 1:
        rank = nonzero.astype(np.int64)
    else:
        minors_zero = np.ones_like(nonzero)
        for r1, r2 in combinations(range(a), 2):
            for c1, c2 in combinations(range(a), 2):
                m = ent[(r1, c1)] * ent[(r2, c2)] - ent[(r1, c2)] * ent[(r2, c1)]
                minors_zero &= (m % q) == 0
        if a == 2:
            rank = np.where(~nonzero, 0, np.where(minors_zero, 1, 2))
        else:
            e = ent
            det = (
                e[(0, 0)] * (e[(1, 1)] * e[(2, 2)] - e[(1, 2)] * e[(2, 1)])
                - e[(0, 1)] * (e[(1, 0)] * e[(2, 2)] - e[(1, 2)] * e[(2, 0)])
                + e[(0, 2)] * (e[(1, 0)] * e[(2, 1)] - e[(1, 1)] * e[(2, 0)])
            )
            full = (det % q) != 0
            rank = np.where(~nonzero, 0, np.where(minors_zero, 1, np.where(full, 3, 2)))
    values, counts = np.unique(rank, return_counts=True)
    out = {r: 0 for r in range(a + 1)}
    out.update({int(v): int(c) for v, c in zip(values, counts)})
    return out


def count_invertible_symmetric(r: int, q: int) -> int:
    """Number of invertible symmetric ``r x r`` matrices over F_q (r <= 3).

    For r = 3 the determinant is affine in the corner entry ``f``:
    ``det = f*(ad - b^2) - (a e^2 - 2bce + d c^2)``, so each choice of the
    other five entries contributes ``q - 1`` (pivot nonzero) or ``q`` / ``0``.
    """
    if r == 0:
        return 1
    if r < 3:
        return count_symmetric_by_rank(r, q)[r]
    if r > 3:
        raise ValueError("order must be at most 3")
    a, b, c, d, e = np.meshgrid(*([np.arange(q, dtype=np.int64)] * 5), indexing="ij")
    pivot = (a * d - b * b) % q
    rest = (a * e * e - 2 * b * c * e + d * c * c) % q
    per = np.where(pivot != 0, q - 1, np.where(rest != 0, q, 0))
    return int(per.sum())


def _odd_primes(k):
    out, c = [], 3
    while len(out) < k:
        if all(c % d for d in range(2, int(c**0.5) + 1)):
            out.append(c)
        c += 2
    return out


def _interpolate(points) -> IntPolyP:
    """Lagrange interpolation through integer points; result must be integral."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    if any(c.denominator != 1 for c in coeffs):
        raise VerificationError("interpolated count polynomial is not integral")
    return IntPolyP(int(c) for c in coeffs)


@lru_cache(maxsize=None)
def sm_anchor(r: int) -> IntPolyP:
    """``sm_p(r, r)`` as a polynomial in p, from exact counts at odd primes.

    The count has degree ``r(r+1)/2``; it is interpolated through that many
    plus one odd primes and then confirmed at one further prime.
    """
    if not 0 <= r <= 3:
        raise ValueError("rank must be between 0 and 3")
    if r == 0:
        return IntPolyP((1,))
    deg = r * (r + 1) // 2
    primes = _odd_primes(deg + 2)
    pts = [(q, count_invertible_symmetric(r, q)) for q in primes[:-1]]
    poly = _interpolate(pts)
    q = primes[-1]
    if poly(q) != count_invertible_symmetric(r, q):
        raise VerificationError(f"sm({r},{r}) interpolation fails at q={q}")
    return poly


@lru_cache(maxsize=None)
def sm(r: int, a: int) -> RatFuncP:
    """Number of symmetric ``a x a`` matrices of rank r over F_p, as a polynomial in p."""
    if r < 0 or a < 0:
        raise ValueError("rank and order must be non-negative")
    if r > a:
        raise ValueError(f"rank {r} exceeds order {a}")
    if a > 3:
        raise ValueError("order must be at most 3")
    val = RatFuncP(sm_anchor(r)) * RatFuncP(phi(a)) / (RatFuncP(phi(r)) * RatFuncP(phi(a - r)))
    if not val.is_polynomial():
        raise VerificationError(f"sm({r},{a}) is not a polynomial in p")
    return val


def sm_count_check(primes=(3, 5, 7, 11), extra=(2,)) -> list[dict]:
    """Compare exhaustive rank counts with ``sm(r, a)`` at each prime.

    Rows for ``extra`` primes are informational (status "report").
    """
    rows = []
    for q in list(primes) + list(extra):
        for a in range(4):
            counts = count_symmetric_by_rank(a, q)
            for r in range(a + 1):
                expected = sm(r, a)(q)
                ok = expected == counts[r]
                status = ("pass" if ok else "fail") if q in primes else ("match" if ok else "mismatch")
                rows.append({"q": q, "r": r, "a": a, "count": counts[r],
                             "sm": int(expected), "status": status})
    return rows


# ---------------------------------------------------------------------------
# generator images


def _check_genus(n):
    if not 1 <= n <= 3:
        raise ValueError(f"genus {n} is outside 1..3")


@lru_cache(maxsize=None)
def omega_Tp(n: int) -> MPoly:
    """``Omega(T(p)) = x0 * prod_{i=1..n} (1 + x_i)``."""
    _check_genus(n)
    out = MPoly.var(n, 0)
    for i in range(1, n + 1):
        out = out * (MPoly.const(n, 1) + MPoly.var(n, i))
    return out


def omega_pi_ab(a: int, b: int, n: int, mode: str = "closed", prime: int | None = None) -> MPoly:
    """GL_n image of ``t(1,..,1, p,..,p, p^2,..,p^2)`` with ``a`` entries p and ``b`` entries p^2."""
    if a < 0 or b < 0 or a + b > n:
        raise ValueError(f"invalid (a, b) = ({a}, {b}) for n = {n}")
    return omega_gl((0,) * (n - a - b) + (1,) * a + (2,) * b, mode, prime)


@lru_cache(maxsize=None)
def omega_Ti_p2(i: int, n: int) -> MPoly:
    """``Omega(T_i(p^2)) = sum_{a+b<=n, a>=i} p^{b(a+b+1)} sm(a-i, a) x0^2 omega(pi_{a,b})``."""
    _check_genus(n)
    if not 1 <= i <= n:
        raise ValueError(f"T_{i}(p^2) is undefined in genus {n}")
    out = MPoly.zero(n)
    for a in range(i, n + 1):
        for b in range(0, n - a + 1):
            c = sm(a - i, a).scale_p(b * (a + b + 1))
            out = out + omega_pi_ab(a, b, n).scale(c)
    return out.shift((2,) + (0,) * n)


@lru_cache(maxsize=None)
def omega_scalar(n: int) -> MPoly:
    """``Omega([p]_n) = p^{-n(n+1)/2} x0^2 x1...xn``."""
    _check_genus(n)
    return MPoly.monomial((2,) + (1,) * n, RatFuncP.p_power(-(n * (n + 1) // 2)))


def omega_generator(tag: str, n: int = 3) -> MPoly:
    """Image of a generator named ``Tp``, ``T1p2``, ``T2p2`` or ``T3p2``."""
    if tag == "Tp":
        return omega_Tp(n)
    if len(tag) == 4 and tag[0] == "T" and tag[2:] == "p2" and tag[1].isdigit():
        return omega_Ti_p2(int(tag[1]), n)
    raise ValueError(f"unknown generator {tag!r}")


# ---------------------------------------------------------------------------
# series


def _increasing_tuples(n, top):
    """Weakly increasing n-tuples with entries in 0..top."""
    if n == 0:
        yield ()
        return

    def rec(slots, lo):
        if slots == 0:
            yield ()
            return
        for d in range(lo, top + 1):
            for rest in rec(slots - 1, d):
                yield (d,) + rest

    yield from rec(n, 0)


@lru_cache(maxsize=None)
def _R_coefficient(n: int, delta: int) -> MPoly:
    out = MPoly.zero(n)
    for ds in _increasing_tuples(n, delta):
        weight = sum((n - k) * d for k, d in enumerate(ds))
        out = out + omega_gl(ds).scale_p(weight)
    return out.shift((delta,) + (0,) * n)


def R_series(n: int, N: int) -> XSeries:
    """``R_n(X)`` through ``X^N`` from the double sum over GL_n types:
    ``sum_{0<=d1<=...<=dn<=delta} p^{n d1 + (n-1) d2 + ... + dn} omega(t(p^d)) (x0 X)^delta``."""
    _check_genus(n)
    if N < 0:
        raise ValueError("order must be non-negative")
    return XSeries(n, N, [_R_coefficient(n, d) for d in range(N + 1)])


@lru_cache(maxsize=None)
def Q_poly(n: int) -> XSeries:
    """``prod_{S subset {1..n}} (1 - x0 prod_{i in S} x_i X)`` as a degree-2^n series."""
    _check_genus(n)
    deg = 2**n
    poly = XSeries.one(n, deg)
    for k in range(n + 1):
        for subset in combinations(range(1, n + 1), k):
            e = [1] + [0] * n
            for s in subset:
                e[s] = 1
            factor = XSeries(n, deg, [MPoly.const(n, 1), -MPoly.monomial(tuple(e))])
            poly = poly * factor
    return poly


def numerator_series(n: int, N: int) -> XSeries:
    """``R_n(X) * Q_n(X)`` through ``X^N``."""
    q = Q_poly(n)
    q = XSeries(n, N, q.coeffs)
    return R_series(n, N) * q


@lru_cache(maxsize=None)
def P_poly(N: int = 12, n: int = 3) -> XSeries:
    """The numerator ``P_n(X)``; coefficients above ``X^{2^n - 2}`` must vanish through ``X^N``."""
    top = 2**n - 2
    if N < top:
        raise ValueError(f"order {N} is below the expected degree {top}")
    full = numerator_series(n, N)
    for k in range(top + 1, N + 1):
        if not full[k].is_zero():
            raise VerificationError(f"coefficient of X^{k} in R_{n} Q_{n} does not vanish", k)
    return full.truncate(top)


# ---------------------------------------------------------------------------
# degree homomorphism x0 -> 1, x_i -> p^i


def nu_specialize(series: XSeries) -> list[RatFuncP]:
    """Apply ``x0 -> 1, x_i -> p^i`` to every coefficient."""
    nu = nu_assignment(series.nvars)
    return [substitute(c, nu).constant_value() for c in series.coeffs]


def nu_product() -> list[RatFuncP]:
    """Expansion of ``(1-pX)(1-p^2X)(1-p^3X)(1-p^4X)(1+(p+p^2+p^3+p^4)X+p^5X^2)``."""
    p = RatFuncP.p_power(1)
    poly = [ONE]

    def mul(a, b):
        out = [RatFuncP.from_int(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            for j, v in enumerate(b):
                out[i + j] = out[i + j] + u * v
        return out

    for k in range(1, 5):
        poly = mul(poly, [ONE, -(p**k)])
    poly = mul(poly, [ONE, p + p**2 + p**3 + p**4, p**5])
    return poly


def nu_check(expected: list[RatFuncP] | None = None, N: int = 12) -> dict:
    """Check the specialised ``P_3`` against an expected coefficient list and
    against the five-factor product.  ``expected`` defaults to the stored
    golden expansion."""
    if expected is None:
        from .fixtures import load_nu_expansion

        expected = load_nu_expansion()
    got = nu_specialize(P_poly(N))
    prod = nu_product()
    checks = []
    for name, ref in (("expansion", expected), ("product", prod)):
        mismatch = None
        for k in range(max(len(ref), len(got))):
            a = got[k] if k < len(got) else RatFuncP.from_int(0)
            b = ref[k] if k < len(ref) else RatFuncP.from_int(0)
            if a != b:
                mismatch = {"index": k, "got": str(a), "expected": str(b)}
                break
        checks.append({"check": f"nu {name}", "status": "pass" if mismatch is None else "fail",
                       "first_mismatch": mismatch})
    return {"check": "nu specialization",
            "status": "pass" if all(c["status"] == "pass" for c in checks) else "fail",
            "details": checks, "coefficients": [str(c) for c in got]}
