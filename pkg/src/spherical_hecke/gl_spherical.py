"""The spherical map for the local Hecke ring of GL_n.

Two independent routes to ``omega(t(p^d1, ..., p^dn))``:

* a closed formula: a Hall-Littlewood style symmetrisation of
  ``x^d * prod_{i<j} (x_j - x_i/p) / (x_j - x_i)`` with a scalar prefactor;
* a brute-force oracle at a concrete prime that enumerates the left cosets
  ``GL_n(Z) g`` in the double coset through upper-triangular Hermite normal
  forms and keeps those with the requested elementary divisors.

Each left coset with HNF diagonal ``(p^a1, ..., p^an)`` contributes the
monomial ``prod_i (x_i / p^i)^a_i``.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .coeffs import ONE, RatFuncP
from .multipoly import MPoly, elem_sym
from .series import XSeries, series_inv

log = logging.getLogger(__name__)

__all__ = [
    "GLDiagType",
    "OracleBudgetError",
    "DEFAULT_BUDGET",
    "omega_pi",
    "omega_t_closed",
    "omega_gl_closed",
    "omega_gl",
    "omega_t_oracle",
    "enumerate_cosets",
    "padic_snf",
    "gl_T_delta",
    "tamagawa_check",
    "diag_types",
]

BUDGET_ENV = "SPHERICAL_HECKE_BUDGET"
DEFAULT_BUDGET = 2**25


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


class OracleBudgetError(RuntimeError):
    """The coset enumeration would exceed the configured budget."""

    def __init__(self, estimate: int, budget: int):
        super().__init__(
            f"coset enumeration needs {estimate} candidate representatives, budget is {budget}"
        )
        self.estimate = estimate
        self.budget = budget


@dataclass(frozen=True)
class GLDiagType:
    """Weakly increasing exponents ``d1 <= ... <= dn`` of ``t(p^d1, ..., p^dn)``."""

    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(d) for d in self.exponents)
        if any(d < 0 for d in exps):
            raise ValueError(f"negative exponent in {exps}")
        if any(exps[i] > exps[i + 1] for i in range(len(exps) - 1)):
            raise ValueError(f"exponents {exps} are not weakly increasing")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def total(self) -> int:
        return sum(self.exponents)

    def __iter__(self):
        return iter(self.exponents)


def _as_type(dtype) -> GLDiagType:
    return dtype if isinstance(dtype, GLDiagType) else GLDiagType(tuple(dtype))


def diag_types(total: int, n: int):
    """All weakly increasing non-negative n-vectors with the given sum."""

    def rec(remaining, slots, lo):
        if slots == 1:
            if remaining >= lo:
                yield (remaining,)
            return
        for d in range(lo, remaining // slots + 1):
            for rest in rec(remaining - d, slots - 1, d):
                yield (d,) + rest

    if n == 0:
        return [()] if total == 0 else []
    return list(rec(total, n, 0))


def weight_exponent(exps) -> int:
    """Power of ``1/p`` in the closed formula: ``sum_i (n+1-i) d_i``."""
    n = len(exps)
    return sum((n - i) * d for i, d in enumerate(exps))


def omega_pi(i: int, n: int) -> MPoly:
    """``omega(pi_i) = p^{-i(i+1)/2} * e_i(x1..xn)``."""
    if not 1 <= i <= n:
        raise ValueError(f"pi_{i} is undefined for GL_{n}")
    return elem_sym(i, n).scale(RatFuncP.p_power(-(i * (i + 1) // 2)))


# ---------------------------------------------------------------------------
# closed formula


def _sign(perm) -> int:
    s = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


@lru_cache(maxsize=None)
def _vandermonde_factors(n: int):
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out.append(MPoly.var(n, j) - MPoly.var(n, i))
    return tuple(out)


@lru_cache(maxsize=None)
def _c_numerator_factor(n: int) -> MPoly:
    inv_p = RatFuncP.p_power(-1)
    f = MPoly.const(n, 1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            f = f * (MPoly.var(n, j) - MPoly.var(n, i).scale(inv_p))
    return f


@lru_cache(maxsize=None)
def symmetrized_c(exps: tuple) -> MPoly:
    """``sum_{sigma in S_n} c(x_sigma)`` for ``c = x^exps prod_{i<j}(x_j - x_i/p)/(x_j - x_i)``.

    The Vandermonde denominator is alternating, so the sum equals the
    alternant of the numerator divided exactly by the Vandermonde product.
    """
    n = len(exps)
    mono = MPoly.monomial((0,) + tuple(exps))
    num = mono * _c_numerator_factor(n)
    alt = MPoly.zero(n)
    for sigma in permutations(range(1, n + 1)):
        term = num.permute(sigma)
        alt = alt + (term if _sign(sigma) > 0 else -term)
    for f in _vandermonde_factors(n):
        alt = alt.exact_divide(f)
    return alt


def _k_lambda_mu(lam: int, mu: int) -> RatFuncP:
    p = RatFuncP.p_power(1)
    base = RatFuncP.p_power(-(2 * lam + mu))
    if lam == 0 and mu == 0:
        return base * RatFuncP.p_power(3) / ((p + 1) * (p * p + p + 1))
    if (lam == 0 and mu > 0) or (lam == mu > 0):
        return base * p / (p + 1)
    return base


@lru_cache(maxsize=None)
def omega_t_closed(lam: int, mu: int) -> MPoly:
    """``omega(t(1, p^lam, p^mu))`` for GL_3 via the closed formula."""
    if lam < 0 or mu < 0:
        raise ValueError("exponents must be non-negative")
    if lam > mu:
        raise ValueError(f"need lambda <= mu, got ({lam}, {mu})")
    return symmetrized_c((0, lam, mu)).scale(_k_lambda_mu(lam, mu))


def _stabilizer_poincare_inv_at(exps) -> RatFuncP:
    """``1 / W(1/p)`` where W is the Poincare polynomial of Stab(exps) in S_n."""
    out = ONE
    i = 0
    while i < len(exps):
        j = i
        while j < len(exps) and exps[j] == exps[i]:
            j += 1
        for k in range(1, j - i + 1):
            # [k]_{1/p} = (p^k - 1) / (p^{k-1} (p - 1))
            bracket = RatFuncP(tuple([1] * k), (0,) * (k - 1) + (1,))
            out = out / bracket
        i = j
    return out


@lru_cache(maxsize=None)
def omega_gl_closed(dtype) -> MPoly:
    """Closed-form ``omega(t(p^d1, ..., p^dn))`` for n <= 3.

    At n = 3 this reduces to :func:`omega_t_closed` after pulling out the
    scalar ``t(p, p, p)^d1``; at n = 1, 2 the same symmetrisation is used
    with the stabiliser normalisation.
    """
    exps = _as_type(dtype).exponents
    n = len(exps)
    if not 1 <= n <= 3:
        raise ValueError("the closed formula is available for 1 <= n <= 3")
    d1 = exps[0]
    shifted = tuple(d - d1 for d in exps)
    if n == 3:
        base = omega_t_closed(shifted[1], shifted[2])
    else:
        k = _stabilizer_poincare_inv_at(shifted) * RatFuncP.p_power(-weight_exponent(shifted))
        base = symmetrized_c(shifted).scale(k)
    if d1:
        scalar_exp = n * (n + 1) // 2 * d1
        base = base.shift((0,) + (d1,) * n, RatFuncP.p_power(-scalar_exp))
    return base


# ---------------------------------------------------------------------------
# brute-force oracle


def padic_snf(matrix, prime: int) -> tuple:
    """Exponents of the elementary divisors of an integer matrix at ``prime``.

    Works over the localisation Z_(p): pivot on the entry of least p-adic
    valuation and clear its row and column using only unit multipliers.
    """
    m = [list(r) for r in matrix]
    n = len(m)
    out = []

    def val(x):
        if x == 0:
            return None
        v = 0
        while x % prime == 0:
            x //= prime
            v += 1
        return v

    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                v = val(m[i][j])
                if v is not None and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            raise ValueError("singular matrix")
        v, bi, bj = best
        m[k], m[bi] = m[bi], m[k]
        for r in m:
            r[k], r[bj] = r[bj], r[k]
        piv = m[k][k]
        unit = piv // prime**v
        for i in range(k + 1, n):
            f = m[i][k] // prime**v
            if f:
                m[i] = [unit * a - f * b for a, b in zip(m[i], m[k])]
        for j in range(k + 1, n):
            f = m[k][j] // prime**v
            if f:
                for r in m:
                    r[j] = unit * r[j] - f * r[k]
        out.append(v)
    return tuple(sorted(out))


def _candidate_diagonals(target, prime):
    """HNF diagonals ``a`` that can carry elementary divisors ``target``.

    Each a_i lies between the smallest and largest target exponent: the gcd
    of all entries divides every diagonal entry, and every a_i is the order
    exponent of a cyclic subquotient of the quotient group.
    """
    lo, hi, total = target[0], target[-1], sum(target)
    n = len(target)
    for a in product(range(lo, hi + 1), repeat=n):
        if sum(a) == total:
            yield a


def _candidates_for(a, prime) -> int:
    return prime ** sum(j * aj for j, aj in enumerate(a))


def _vals(x, prime, cap):
    """Elementwise min(v_p(x), cap), with v_p(0) = cap."""
    v = np.zeros(np.shape(x), dtype=np.int64)
    x = np.asarray(x, dtype=np.int64)
    pk = 1
    for _ in range(cap):
        pk *= prime
        hit = (x % pk) == 0
        if not hit.any():
            break
        v += hit
    return v


def _count_fast(a, target, prime) -> int:
    n = len(a)
    cap = sum(target) + 1
    if n == 1:
        return 1
    if n == 2:
        b12 = np.arange(prime ** a[1], dtype=np.int64)
        v1 = np.minimum(min(a), _vals(b12, prime, cap))
        return int(np.count_nonzero(v1 == target[0]))
    a1, a2, a3 = a
    b12 = np.arange(prime**a2, dtype=np.int64).reshape(-1, 1, 1)
    b13 = np.arange(prime**a3, dtype=np.int64).reshape(1, -1, 1)
    b23 = np.arange(prime**a3, dtype=np.int64).reshape(1, 1, -1)
    v12, v13, v23 = _vals(b12, prime, cap), _vals(b13, prime, cap), _vals(b23, prime, cap)
    v1 = np.minimum(np.minimum(v12, v13), v23)
    v1 = np.minimum(v1, min(a))
    mixed = _vals(b12 * b23 - b13 * prime**a2, prime, cap)
    v2 = np.minimum(mixed, min(a1 + a2, a1 + a3, a2 + a3))
    v2 = np.minimum(v2, a1 + v23)
    v2 = np.minimum(v2, a3 + v12)
    ok = (v1 == target[0]) & (v2 == target[0] + target[1])
    return int(np.count_nonzero(ok))


def _count_generic(a, target, prime) -> int:
    n = len(a)
    slots = [(i, j) for j in range(n) for i in range(j)]
    ranges = [range(prime ** a[j]) for (_, j) in slots]
    count = 0
    for fill in product(*ranges):
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = prime ** a[i]
        for (i, j), v in zip(slots, fill):
            m[i][j] = v
        if padic_snf(m, prime) == target:
            count += 1
    return count


def enumerate_cosets(dtype, prime: int, budget: int | None = None, method: str = "auto") -> dict:
    """Number of left cosets per HNF diagonal for ``t(p^d1, ..., p^dn)``.

    Returns ``{diagonal exponents: count}`` (diagonals with zero count are
    omitted).  ``method`` is "fast" (vectorised, n <= 3), "generic" (per
    matrix p-adic Smith form) or "auto".
    """
    target = _as_type(dtype).exponents
    if prime < 2:
        raise ValueError("prime must be at least 2")
    if budget is None:
        budget = default_budget()
    diagonals = list(_candidate_diagonals(target, prime))
    estimate = sum(_candidates_for(a, prime) for a in diagonals)
    if estimate > budget:
        raise OracleBudgetError(estimate, budget)
    if method == "auto":
        method = "fast" if len(target) <= 3 else "generic"
    counter = _count_fast if method == "fast" else _count_generic
    log.debug("enumerating %d candidates for %s at p=%d", estimate, target, prime)
    out = {}
    for a in diagonals:
        c = counter(a, target, prime)
        if c:
            out[a] = c
    return out


def omega_t_oracle(dtype, prime: int, budget: int | None = None, method: str = "auto") -> MPoly:
    """``omega(t(p^d1..p^dn))`` at ``p = prime`` by explicit coset enumeration.

    Coefficients are rational constants.
    """
    target = _as_type(dtype).exponents
    n = len(target)
    terms = {}
    for a, count in enumerate_cosets(target, prime, budget, method).items():
        weight = prime ** sum((i + 1) * ai for i, ai in enumerate(a))
        terms[(0,) + a] = terms.get((0,) + a, 0) + Fraction(count, weight)
    return MPoly(n, terms)


def omega_gl(dtype, mode: str = "closed", prime: int | None = None, budget: int | None = None) -> MPoly:
    """Dispatch to the closed formula or the oracle (``mode="oracle"``)."""
    if mode == "closed":
        return omega_gl_closed(_as_type(dtype))
    if mode == "oracle":
        if prime is None:
            raise ValueError("oracle mode needs a prime")
        return omega_t_oracle(dtype, prime, budget)
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# generating series


def gl_T_delta(delta: int, n: int, mode: str = "closed", prime: int | None = None,
               budget: int | None = None) -> MPoly:
    """Image of ``t(p^delta)``: the sum over all types with exponent sum ``delta``."""
    if delta < 0:
        raise ValueError("delta must be non-negative")
    out = MPoly.zero(n)
    for d in diag_types(delta, n):
        out = out + omega_gl(d, mode, prime, budget)
    return out


def tamagawa_check(n: int, N: int, mode: str = "closed", prime: int | None = None,
                   budget: int | None = None) -> dict:
    """Compare ``sum_delta omega(t(p^delta)) X^delta`` with the inverse of
    ``sum_i (-1)^i p^{i(i-1)/2} omega(pi_i) X^i`` through order N."""
    if N < 1:
        raise ValueError("order must be at least 1")
    lhs = XSeries(n, N, [gl_T_delta(d, n, mode, prime, budget) for d in range(N + 1)])
    den = [MPoly.const(n, 1)]
    for i in range(1, n + 1):
        c = omega_pi(i, n).scale(RatFuncP.p_power(i * (i - 1) // 2) * (-1) ** i)
        den.append(c)
    rhs = series_inv(XSeries(n, N, den))
    if mode == "oracle":
        rhs = rhs.map(lambda c: c.eval_p(prime))
    k = lhs.first_mismatch(rhs)
    name = f"tamagawa n={n} order={N}" + (f" p={prime}" if mode == "oracle" else "")
    return {"check": name, "status": "pass" if k is None else "fail", "first_mismatch": k}
