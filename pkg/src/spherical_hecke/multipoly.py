"""Sparse polynomials in the Satake parameters ``x0, x1, ..., xn`` over Q(p).

Slot 0 of every exponent vector is ``x0``; slots ``1..n`` are ``x1..xn``.
Symmetry always refers to permutations of ``x1..xn``.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Mapping

from .coeffs import ONE, ZERO, RatFuncP

__all__ = [
    "MPoly",
    "SymmetryError",
    "grlex_key",
    "normalize_partition",
    "sym_orbit",
    "sym_genfun",
    "elem_sym",
    "to_sym_basis",
    "from_sym_basis",
    "substitute",
    "nu_assignment",
]

MAX_EXPONENT = 10_000


class SymmetryError(ValueError):
    """Raised when a polynomial expected to be symmetric is not."""

    def __init__(self, message, transposition=None):
        super().__init__(message)
        self.transposition = transposition


def grlex_key(exps: tuple) -> tuple:
    """Sort key for graded lexicographic order (use with ``reverse=True``)."""
    return (sum(exps), exps)


def _check_exps(exps):
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")


class MPoly:
    """Polynomial in ``x0..x_nvars`` with :class:`RatFuncP` coefficients.

    Terms live in a dict keyed by exponent tuples; zero coefficients are never
    stored.  :meth:`items` yields terms in descending graded lex order, so
    every emitted form is deterministic.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple, RatFuncP] = {}
        if terms:
            width = nvars + 1
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != width:
                    raise ValueError(f"monomial {exps} does not have {width} slots")
                _check_exps(exps)
                c = RatFuncP.coerce(c)
                if c.num:
                    prev = self.terms.get(exps)
                    c = c if prev is None else prev + c
                    if c.num:
                        self.terms[exps] = c
                    else:
                        del self.terms[exps]

    @classmethod
    def _from_dict(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._from_dict(nvars, {})

    @classmethod
    def const(cls, nvars: int, c=1) -> "MPoly":
        c = RatFuncP.coerce(c)
        return cls._from_dict(nvars, {(0,) * (nvars + 1): c} if c.num else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "MPoly":
        exps = [0] * (nvars + 1)
        exps[i] = 1
        return cls._from_dict(nvars, {tuple(exps): ONE})

    @classmethod
    def monomial(cls, exps, c=1) -> "MPoly":
        exps = tuple(exps)
        return cls(len(exps) - 1, {exps: c})

    # inspection -----------------------------------------------------------
    def items(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coeff(self, exps) -> RatFuncP:
        return self.terms.get(tuple(exps), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        zero = (0,) * (self.nvars + 1)
        return all(e == zero for e in self.terms)

    def constant_value(self) -> RatFuncP:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * (self.nvars + 1), ZERO)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.items())

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MPoly.const(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            a, b = other, self
        else:
            a, b = self, other
        out = dict(a.terms)
        for e, c in b.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s.num:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._from_dict(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._from_dict(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "MPoly":
        c = RatFuncP.coerce(c)
        if not c.num:
            return MPoly.zero(self.nvars)
        if c.is_one():
            return self
        return MPoly._from_dict(self.nvars, {e: v * c for e, v in self.terms.items()})

    def scale_p(self, k: int) -> "MPoly":
        """Multiply every coefficient by ``p**k``."""
        if k == 0:
            return self
        return MPoly._from_dict(self.nvars, {e: v.scale_p(k) for e, v in self.terms.items()})

    def shift(self, exps, c=ONE) -> "MPoly":
        """Multiply by the single term ``c * x**exps``."""
        exps = tuple(exps)
        c = RatFuncP.coerce(c)
        out = {}
        for e, v in self.terms.items():
            ne = tuple(a + b for a, b in zip(e, exps))
            out[ne] = v if c.is_one() else v * c
        if not c.num:
            return MPoly.zero(self.nvars)
        return MPoly._from_dict(self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        other = self._coerce(other)
        if len(self.terms) < len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        if not b.terms:
            return MPoly.zero(self.nvars)
        out: dict[tuple, RatFuncP] = {}
        get = out.get
        aitems = list(a.terms.items())
        for eb, cb in b.terms.items():
            for ea, ca in aitems:
                e = tuple([x + y for x, y in zip(ea, eb)])
                v = ca * cb
                prev = get(e)
                out[e] = v if prev is None else prev + v
        return MPoly._from_dict(self.nvars, {e: v for e, v in out.items() if v.num})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, RatFuncP)):
            return self == MPoly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # structure ------------------------------------------------------------
    def permute(self, perm) -> "MPoly":
        """Apply ``x_i -> x_perm[i-1]`` to x1..xn (``perm`` is 1-based)."""
        out = {}
        for e, c in self.terms.items():
            ne = [e[0]] + [0] * self.nvars
            for i, target in enumerate(perm, start=1):
                ne[target] = e[i]
            out[tuple(ne)] = c
        return MPoly._from_dict(self.nvars, out)

    def swap(self, i: int, j: int) -> "MPoly":
        perm = list(range(1, self.nvars + 1))
        perm[i - 1], perm[j - 1] = j, i
        return self.permute(perm)

    def symmetry_violation(self):
        """First generating transposition (i, i+1) that changes the polynomial, or None."""
        for i in range(1, self.nvars):
            if self.swap(i, i + 1) != self:
                return (i, i + 1)
        return None

    def is_symmetric(self) -> bool:
        return self.symmetry_violation() is None

    def map_coeffs(self, fn) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            v = RatFuncP.coerce(fn(c))
            if v.num:
                out[e] = v
        return MPoly._from_dict(self.nvars, out)

    def eval_p(self, prime: int) -> "MPoly":
        """Specialise every coefficient at ``p = prime`` (rational constants)."""
        return self.map_coeffs(lambda c: c(prime))

    def extend(self, nvars: int) -> "MPoly":
        """Embed into a ring with more x-variables."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable count")
        pad = (0,) * (nvars - self.nvars)
        return MPoly._from_dict(nvars, {e + pad: c for e, c in self.terms.items()})

    def exact_divide(self, divisor: "MPoly") -> "MPoly":
        """Quotient of an exact division, by repeated leading-term cancellation.

        Leading terms use plain lex order, so divisors such as ``x_j - x_i``
        with ``j > i`` have leading monomial ``x_j``.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e = max(divisor.terms, key=_rev_lex)
        lead_c = divisor.terms[lead_e]
        rest = MPoly._from_dict(self.nvars, {e: c for e, c in divisor.terms.items() if e != lead_e})
        rem = dict(self.terms)
        quot: dict[tuple, RatFuncP] = {}
        while rem:
            e = max(rem, key=_rev_lex)
            q_e = tuple(a - b for a, b in zip(e, lead_e))
            if min(q_e) < 0:
                raise ArithmeticError("division is not exact")
            q_c = rem.pop(e) / lead_c
            quot[q_e] = q_c
            for re_, rc in rest.terms.items():
                ne = tuple(a + b for a, b in zip(re_, q_e))
                v = rem.get(ne, ZERO) - rc * q_c
                if v.num:
                    rem[ne] = v
                else:
                    rem.pop(ne, None)
        return MPoly._from_dict(self.nvars, quot)

    # output -----------------------------------------------------------------
    def __str__(self):
        from .emit import mpoly_text

        return mpoly_text(self)

    def __repr__(self):
        return f"MPoly({self.nvars}, {str(self)!r})"


def _rev_lex(e):
    # highest-index variable dominates, so x3 - x1/p leads with x3
    return tuple(reversed(e))


# ---------------------------------------------------------------------------
# symmetric polynomials


def normalize_partition(lam: Iterable[int], n: int) -> tuple:
    """Validate a weakly decreasing exponent vector and pad it to ``n`` parts."""
    lam = tuple(int(v) for v in lam)
    if any(v < 0 for v in lam):
        raise ValueError(f"negative entry in exponent vector {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"exponent vector {lam} is not weakly decreasing")
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"exponent vector {lam} has more than {n} nonzero parts")
        lam = lam[:n]
    return lam + (0,) * (n - len(lam))


def sym_orbit(lam, n: int, x0_degree: int = 0) -> MPoly:
    """Monomial symmetric polynomial: sum of the distinct permutations of
    ``x1**l1 * ... * xn**ln``, each with coefficient 1."""
    lam = normalize_partition(lam, n)
    terms = {(x0_degree,) + e: ONE for e in set(permutations(lam))}
    return MPoly._from_dict(n, terms)


def sym_genfun(lam, n: int) -> MPoly:
    """Monomial symmetric polynomial built as the coefficient of ``t`` in
    ``prod_sigma (1 + t * sigma(x**lam))`` divided by its leading coefficient.

    The ``t``-linear coefficient of the product is the plain sum over all
    ``n!`` permutations, so each orbit monomial appears ``|Stab(lam)|`` times.
    """
    lam = normalize_partition(lam, n)
    # polynomial in t with MPoly coefficients, truncated after t**1
    const = MPoly.const(n, 1)
    linear = MPoly.zero(n)
    for sigma in permutations(range(n)):
        e = [0] * (n + 1)
        for i, s in enumerate(sigma):
            e[s + 1] = lam[i]
        mono = MPoly._from_dict(n, {tuple(e): ONE})
        linear = linear + const * mono
    lead = max(linear.terms, key=grlex_key)
    return linear.scale(linear.terms[lead].inverse())


def elem_sym(i: int, n: int) -> MPoly:
    """The ``i``-th elementary symmetric polynomial in x1..xn."""
    if not 0 <= i <= n:
        raise ValueError(f"elementary symmetric index {i} out of range 0..{n}")
    terms = {}
    for subset in combinations(range(1, n + 1), i):
        e = [0] * (n + 1)
        for s in subset:
            e[s] = 1
        terms[tuple(e)] = ONE
    return MPoly._from_dict(n, terms)


def to_sym_basis(poly: MPoly) -> dict[tuple[int, tuple], RatFuncP]:
    """Decompose a symmetric polynomial as ``sum c * x0**d * sym_lam``.

    Keys are ``(d, lam)`` with ``lam`` weakly decreasing.  Raises
    :class:`SymmetryError` naming a transposition that breaks symmetry.
    """
    bad = poly.symmetry_violation()
    if bad is not None:
        raise SymmetryError(f"polynomial is not symmetric under x{bad[0]} <-> x{bad[1]}", bad)
    out = {}
    for e, c in poly.terms.items():
        lam = tuple(sorted(e[1:], reverse=True))
        if tuple(e[1:]) == lam:
            out[(e[0], lam)] = c
    return dict(sorted(out.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1]), reverse=True))


def from_sym_basis(basis: Mapping[tuple[int, tuple], object], n: int) -> MPoly:
    """Reassemble the polynomial described by :func:`to_sym_basis` output."""
    out = MPoly.zero(n)
    for (d, lam), c in basis.items():
        out = out + sym_orbit(lam, n, x0_degree=d).scale(c)
    return out


# ---------------------------------------------------------------------------
# substitution


def substitute(poly: MPoly, assignment: Mapping[int, object], nvars: int | None = None) -> MPoly:
    """Image of ``poly`` under ``x_i -> assignment[i]``.

    Values may be MPoly (in a common target ring), RatFuncP or int.  Every
    variable that occurs in ``poly`` must be assigned.
    """
    targets = [v.nvars for v in assignment.values() if isinstance(v, MPoly)]
    if nvars is None:
        nvars = targets[0] if targets else 0
    if any(t != nvars for t in targets):
        raise ValueError("assigned polynomials live in different rings")
    images = {}
    for i, v in assignment.items():
        images[i] = v if isinstance(v, MPoly) else MPoly.const(nvars, v)
    for e in poly.terms:
        for i, k in enumerate(e):
            if k and i not in images:
                raise KeyError(f"no value assigned to x{i}")
    powers: dict[tuple[int, int], MPoly] = {}

    def power(i, k):
        key = (i, k)
        if key not in powers:
            powers[key] = images[i] ** k
        return powers[key]

    out = MPoly.zero(nvars)
    for e, c in poly.terms.items():
        term = MPoly.const(nvars, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out


def nu_assignment(n: int = 3) -> dict[int, RatFuncP]:
    """Degree homomorphism ``x0 -> 1, x_i -> p**i``."""
    out = {0: ONE}
    for i in range(1, n + 1):
        out[i] = RatFuncP.p_power(i)
    return out
