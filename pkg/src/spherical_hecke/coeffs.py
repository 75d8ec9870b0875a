"""Exact coefficients: integer polynomials in the formal prime ``p`` and the
field Q(p) of rational functions in ``p``.

Polynomials are dense tuples of Python ints, lowest degree first, with no
trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

__all__ = [
    "CoefficientError",
    "PoleError",
    "IntPolyP",
    "RatFuncP",
    "rf_arith",
    "rf_eval",
    "poly_str",
    "parse_poly",
]


class CoefficientError(ZeroDivisionError):
    """Division by the zero element of Q(p)."""


class PoleError(ArithmeticError):
    """Evaluation of a rational function at one of its poles."""


# ---------------------------------------------------------------------------
# dense integer polynomial kernels (tuples, low degree first)


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _neg(a):
    return tuple(-v for v in a)


def _sub(a, b):
    return _add(a, _neg(b))


def _mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        s = a[0]
        return tuple(s * v for v in b)
    if len(b) == 1:
        s = b[0]
        return tuple(s * v for v in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return tuple(out)


def _scale(a, s):
    if s == 0:
        return ()
    return tuple(s * v for v in a)


def _shift(a, k):
    if not a or k == 0:
        return a
    return (0,) * k + a


def _content(a):
    g = 0
    for v in a:
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _primitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    c = _content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(v // c for v in a)


def _prem(a, b):
    """Pseudo-remainder of a by b over Z."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * v for v in r]
        for i, v in enumerate(b):
            r[i + shift] -= lr * v
        r = list(_trim(r))
    return tuple(r)


def _gcd_q(a, b):
    """Primitive gcd over Q[p], normalised to positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    return _primitive(a)


def _exact_div(a, b):
    """Quotient of a by b in Z[p]; raises if the division is not exact."""
    if not b:
        raise CoefficientError("polynomial division by zero")
    if not a:
        return ()
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db) if len(a) > db else []
    while r and len(r) - 1 >= db:
        lr = r[-1]
        c, rem = divmod(lr, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(r) - 1 - db
        q[shift] = c
        for i, v in enumerate(b):
            r[i + shift] -= c * v
        r = list(_trim(r))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return _trim(q)


def _low_order(a):
    for i, v in enumerate(a):
        if v:
            return i
    return len(a)


def _is_pow_p(d):
    """True when d is the monic monomial p**k."""
    return d[-1] == 1 and _low_order(d) == len(d) - 1


def _eval_int(a, x):
    acc = 0
    for v in reversed(a):
        acc = acc * x + v
    return acc


# ---------------------------------------------------------------------------
# string form: "p^3 - 2*p^2 + 1"


def poly_str(a) -> str:
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if e == 0:
            body = str(m)
        else:
            var = "p" if e == 1 else f"p^{e}"
            body = var if m == 1 else f"{m}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(p(?:\^(\d+))?)?")


def parse_poly(text: str) -> tuple:
    """Parse the monomial form written by :func:`poly_str`.

    Accepts ``2*p^3``, ``2p^3``, ``p`` and bare integers, joined by ``+``/``-``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        sign, digits, var, exp = m.groups()
        if not digits and not var:
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if var else 0
        coeffs[e] = coeffs.get(e, 0) + c
        pos = m.end()
        if pos < len(s) and s[pos] not in "+-":
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
    if not coeffs:
        return ()
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c
    return _trim(out)


# ---------------------------------------------------------------------------


class IntPolyP:
    """Integer polynomial in ``p``; ``coeffs[k]`` is the coefficient of ``p**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def from_str(cls, text: str) -> "IntPolyP":
        return cls(parse_poly(text))

    @classmethod
    def p_power(cls, k: int) -> "IntPolyP":
        return cls((0,) * k + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        return IntPolyP(_add(self.coeffs, _as_poly(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return IntPolyP(_sub(self.coeffs, _as_poly(other)))

    def __rsub__(self, other):
        return IntPolyP(_sub(_as_poly(other), self.coeffs))

    def __neg__(self):
        return IntPolyP(_neg(self.coeffs))

    def __mul__(self, other):
        return IntPolyP(_mul(self.coeffs, _as_poly(other)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = (1,)
        for _ in range(k):
            out = _mul(out, self.coeffs)
        return IntPolyP(out)

    def __eq__(self, other):
        if isinstance(other, (IntPolyP, int)):
            return self.coeffs == _as_poly(other)
        return NotImplemented

    def __hash__(self):
        return hash(("IntPolyP", self.coeffs))

    def __call__(self, x: int) -> int:
        return _eval_int(self.coeffs, x)

    def __str__(self):
        return poly_str(self.coeffs)

    def __repr__(self):
        return f"IntPolyP({poly_str(self.coeffs)!r})"


def _as_poly(x):
    if isinstance(x, IntPolyP):
        return x.coeffs
    if isinstance(x, int):
        return (x,) if x else ()
    raise TypeError(f"cannot use {type(x).__name__} as an integer polynomial")


def _canon(num, den):
    """Canonical fraction: coprime over Q, contents coprime, lc(den) > 0."""
    if not den:
        raise CoefficientError("zero denominator")
    if not num:
        return (), (1,)
    if len(den) == 1:
        g = gcd(_content(num), den[0])
        if den[0] < 0:
            g = -g
        if g != 1:
            num = tuple(v // g for v in num)
            den = (den[0] // g,)
        return num, den
    if _is_pow_p(den):
        k = min(_low_order(num), len(den) - 1)
        if k:
            num = num[k:]
            den = den[k:]
        return num, den
    g = _gcd_q(num, den)
    if len(g) > 1:
        num = _exact_div(num, g)
        den = _exact_div(den, g)
    c = gcd(_content(num), _content(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    return num, den


class RatFuncP:
    """Element of Q(p) kept as a canonical fraction ``num/den`` in Z[p].

    Canonical form: ``gcd(num, den) = 1`` over Q, the integer contents of
    ``num`` and ``den`` are coprime, and ``den`` has positive leading
    coefficient.  Zero is ``0/1``.  Equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), *, _canonical=False):
        if isinstance(num, IntPolyP):
            num = num.coeffs
        if isinstance(den, IntPolyP):
            den = den.coeffs
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,) if den else ()
        if not _canonical:
            num, den = _canon(_trim(num), _trim(den))
        self.num = num
        self.den = den
        self._hash = None

    # constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_int(cls, n: int) -> "RatFuncP":
        return cls._raw((n,) if n else (), (1,))

    @classmethod
    def p_power(cls, k: int) -> "RatFuncP":
        """``p**k`` for any integer ``k``."""
        if k >= 0:
            return cls._raw((0,) * k + (1,), (1,))
        return cls._raw((1,), (0,) * (-k) + (1,))

    @classmethod
    def from_str(cls, text: str) -> "RatFuncP":
        """Parse ``"num"`` or ``"(num)/(den)"`` in monomial form."""
        s = text.strip()
        depth = 0
        split = None
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
        if split is None:
            return cls(parse_poly(_unwrap(s)))
        return cls(parse_poly(_unwrap(s[:split])), parse_poly(_unwrap(s[split + 1:])))

    @classmethod
    def coerce(cls, x) -> "RatFuncP":
        if isinstance(x, RatFuncP):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        if isinstance(x, Fraction):
            return cls(x.numerator, x.denominator)
        if isinstance(x, IntPolyP):
            return cls._raw(x.coeffs, (1,))
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFuncP")

    # predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def is_laurent(self) -> bool:
        """True when the denominator is a power of p."""
        return _is_pow_p(self.den)

    def __bool__(self):
        return bool(self.num)

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RatFuncP):
            if isinstance(other, (int, Fraction, IntPolyP)):
                other = RatFuncP.coerce(other)
            else:
                return NotImplemented
        a, b = self, other
        if not a.num:
            return b
        if not b.num:
            return a
        if a.den == b.den:
            num = _add(a.num, b.num)
            if len(a.den) == 1 and a.den[0] == 1:
                return RatFuncP._raw(num, a.den)
            return RatFuncP(num, a.den)
        ka, kb = len(a.den) - 1, len(b.den) - 1
        if _is_pow_p(a.den) and _is_pow_p(b.den):
            k = max(ka, kb)
            num = _add(_shift(a.num, k - ka), _shift(b.num, k - kb))
            return RatFuncP(num, _shift((1,), k))
        return RatFuncP(_add(_mul(a.num, b.den), _mul(b.num, a.den)), _mul(a.den, b.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFuncP._raw(_neg(self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, RatFuncP):
            if isinstance(other, (int, Fraction, IntPolyP)):
                other = RatFuncP.coerce(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFuncP.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFuncP):
            if isinstance(other, int):
                if other == 0:
                    return ZERO
                if self.den == (1,):
                    return RatFuncP._raw(_scale(self.num, other), self.den)
                return RatFuncP(_scale(self.num, other), self.den)
            if isinstance(other, (Fraction, IntPolyP)):
                other = RatFuncP.coerce(other)
            else:
                return NotImplemented
        a, b = self, other
        if not a.num or not b.num:
            return ZERO
        if b.den == (1,) and len(b.num) == 1 and a.den == (1,):
            return RatFuncP._raw(_scale(a.num, b.num[0]), a.den)
        return RatFuncP(_mul(a.num, b.num), _mul(a.den, b.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncP":
        if not self.num:
            raise CoefficientError("inverse of the zero element of Q(p)")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = _neg(num), _neg(den)
        return RatFuncP._raw(num, den)

    def __truediv__(self, other):
        if not isinstance(other, RatFuncP):
            if isinstance(other, (int, Fraction, IntPolyP)):
                other = RatFuncP.coerce(other)
            else:
                return NotImplemented
        if not other.num:
            raise CoefficientError("division by the zero element of Q(p)")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFuncP.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        num, den = (1,), (1,)
        for _ in range(k):
            num = _mul(num, self.num)
            den = _mul(den, self.den)
        return RatFuncP._raw(num, den) if k else ONE

    def scale_p(self, k: int) -> "RatFuncP":
        """Multiply by ``p**k`` (cheap)."""
        if k == 0 or not self.num:
            return self
        if k > 0:
            return RatFuncP(_shift(self.num, k), self.den)
        return RatFuncP(self.num, _shift(self.den, -k))

    # comparison / misc --------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatFuncP):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, IntPolyP)):
            return self == RatFuncP.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __call__(self, prime: int) -> Fraction:
        return rf_eval(self, prime)

    @property
    def numerator(self) -> IntPolyP:
        return IntPolyP(self.num)

    @property
    def denominator(self) -> IntPolyP:
        return IntPolyP(self.den)

    def num_str(self) -> str:
        return poly_str(self.num)

    def den_str(self) -> str:
        return poly_str(self.den)

    def __str__(self):
        if self.den == (1,):
            return poly_str(self.num)
        n, d = poly_str(self.num), poly_str(self.den)
        if _nterms(self.num) > 1:
            n = f"({n})"
        if _nterms(self.den) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFuncP({str(self)!r})"


def _nterms(a):
    return sum(1 for v in a if v)


def _unwrap(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        s = s[1:-1].strip()
    return s


ZERO = RatFuncP._raw((), (1,))
ONE = RatFuncP._raw((1,), (1,))
P = RatFuncP._raw((0, 1), (1,))


def rf_arith(a: RatFuncP, b: RatFuncP, kind: str) -> RatFuncP:
    """Field operation ``kind`` in {"add", "sub", "mul", "div"}."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def rf_eval(a: RatFuncP, prime: int) -> Fraction:
    """Evaluate ``a`` at ``p = prime``."""
    a = RatFuncP.coerce(a)
    d = _eval_int(a.den, prime)
    if d == 0:
        raise PoleError(f"{a} has a pole at p = {prime}")
    return Fraction(_eval_int(a.num, prime), d)
