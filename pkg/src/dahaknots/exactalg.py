"""Exact arithmetic over Q(q, t) and Laurent polynomials in X over it.

Coefficients are ``int`` or :class:`fractions.Fraction`.  All values are
immutable; every operation returns a new object.

Types
-----
LaurentQT
    Sparse Laurent polynomial in q, t with rational coefficients.
RatQT
    Canonical fraction ``num/den`` of LaurentQT.  ``den`` is a genuine
    polynomial (no negative exponents, not divisible by q or t), has integer
    coefficients and a positive leading coefficient in graded-lex order on
    (q, t); ``num`` has integer coefficients, the contents of ``num`` and
    ``den`` are coprime, and ``gcd(num, den) = 1`` in Q[q, t].  Equal values
    therefore have identical representations.
LaurentX
    Laurent polynomial in X with RatQT coefficients.
LaurentQ
    Laurent polynomial in q alone with rational coefficients.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm

from . import _upoly as up

Coeff = int | Fraction


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class PoleError(ZeroDivisionError):
    """Raised when a substitution sends a denominator to zero."""


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _fmt_coeff(c):
    c = _norm_coeff(c)
    return str(c)


def _parse_coeff(s: str):
    return _norm_coeff(Fraction(s))


# ---------------------------------------------------------------------------
# LaurentQT
# ---------------------------------------------------------------------------


class LaurentQT:
    """Sparse Laurent polynomial in q, t.  Keys are ``(q_exp, t_exp)``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        else:
            self._terms = {k: _norm_coeff(v) for k, v in terms.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): _norm_coeff(c)} if c else {})

    @classmethod
    def monomial(cls, qe=0, te=0, c=1):
        return cls._raw({(qe, te): _norm_coeff(c)} if c else {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms in ascending (q-exp, t-exp) order."""
        return sorted(self._terms.items())

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_const(self):
        return not self._terms or (len(self._terms) == 1 and (0, 0) in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def const_value(self):
        return self._terms.get((0, 0), 0)

    def __eq__(self, other):
        if isinstance(other, LaurentQT):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, LaurentQT):
            other = LaurentQT.const(other)
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        r = dict(a)
        for k, v in b.items():
            w = r.get(k, 0) + v
            if w:
                r[k] = w
            else:
                r.pop(k, None)
        return LaurentQT._raw(r)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQT._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentQT):
            other = LaurentQT.const(other)
        r = dict(self._terms)
        for k, v in other._terms.items():
            w = r.get(k, 0) - v
            if w:
                r[k] = w
            else:
                r.pop(k, None)
        return LaurentQT._raw(r)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentQT):
            if not other:
                return LaurentQT()
            return LaurentQT._raw({k: _norm_coeff(v * other) for k, v in self._terms.items()})
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((bq, bt), bc), = b.items()
            return LaurentQT._raw({(q + bq, t + bt): _norm_coeff(c * bc) for (q, t), c in a.items()})
        r = {}
        get = r.get
        for (bq, bt), bc in b.items():
            for (aq, at), ac in a.items():
                k = (aq + bq, at + bt)
                r[k] = get(k, 0) + ac * bc
        return LaurentQT._raw({k: _norm_coeff(v) for k, v in r.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            ((qe, te), c), = self._terms.items()
            return LaurentQT.monomial(qe * n, te * n, Fraction(1) / Fraction(c) ** (-n))
        r = LaurentQT.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def shift(self, qe=0, te=0):
        return LaurentQT._raw({(q + qe, t + te): c for (q, t), c in self._terms.items()})

    def min_exponents(self):
        return (min(q for q, _ in self._terms), min(t for _, t in self._terms))

    def max_exponents(self):
        return (max(q for q, _ in self._terms), max(t for _, t in self._terms))

    def leading(self):
        """Leading ``((qe, te), coeff)`` in graded-lex order on (q, t)."""
        k = max(self._terms, key=lambda e: (e[0] + e[1], e[0], e[1]))
        return k, self._terms[k]

    def content_denominator(self):
        d = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        return d

    def int_content(self):
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def map_monomial(self, sign, dq, dt, keep_t=True):
        """Substitute ``t -> sign * q^dq * t^dt`` (``keep_t=False`` drops t)."""
        r = {}
        for (q, t), c in self._terms.items():
            k = (q + dq * t, dt * t if keep_t else 0)
            v = c if (sign > 0 or t % 2 == 0) else -c
            w = r.get(k, 0) + v
            if w:
                r[k] = w
            else:
                r.pop(k)
        return LaurentQT._raw(r)

    def swap_q_inverse(self):
        return LaurentQT._raw({(-q, t): c for (q, t), c in self._terms.items()})

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for (qe, te), c in self.items():
            parts.append(_term_text(c, (("q", qe), ("t", te))))
        return _join_terms(parts)

    def to_json(self):
        return [[qe, te, _fmt_coeff(c)] for (qe, te), c in self.items()]

    @classmethod
    def from_json(cls, data):
        return cls({(int(a), int(b)): _parse_coeff(c) for a, b, c in data})

    def __repr__(self):
        return f"LaurentQT({self.to_text()})"

    # conversions to the dense kernels (t main variable, coefficients in Z[q])
    def _to_bpoly(self):
        mq, mt = self.min_exponents()
        Mq, Mt = self.max_exponents()
        rows = [[0] * (Mq - mq + 1) for _ in range(Mt - mt + 1)]
        for (qe, te), c in self._terms.items():
            rows[te - mt][qe - mq] = c
        return [up.trim(r) for r in rows]

    @classmethod
    def _from_bpoly(cls, b, mq=0, mt=0):
        r = {}
        for te, row in enumerate(b):
            for qe, c in enumerate(row):
                if c:
                    r[(qe + mq, te + mt)] = c
        return cls._raw(r)


def _term_text(c, factors):
    c = _norm_coeff(c)
    pieces = []
    for name, e in factors:
        if e == 0:
            continue
        pieces.append(name if e == 1 else f"{name}^{e}")
    if not pieces:
        return str(c)
    body = "*".join(pieces)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def _join_terms(parts):
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


Q = LaurentQT.monomial(1, 0)
T = LaurentQT.monomial(0, 1)


# ---------------------------------------------------------------------------
# gcd over Q[q, t]
# ---------------------------------------------------------------------------


def _as_int_poly(a: LaurentQT) -> LaurentQT:
    d = a.content_denominator()
    if d != 1:
        a = a * d
    return a


def gcd_qt(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    """Gcd in Q[q, t], primitive over Z with positive leading coefficient.

    Laurent inputs are accepted; the monomial parts contribute the monomial
    gcd.  Computed by a primitive polynomial remainder sequence in Z[q][t].
    """
    if a.is_zero() and b.is_zero():
        return LaurentQT()
    if a.is_zero():
        a, b = b, a
    a = _as_int_poly(a)
    ma = a.min_exponents()
    if b.is_zero():
        return _sign_normalize(a)
    b = _as_int_poly(b)
    mb = b.min_exponents()
    g = up.b_gcd(a._to_bpoly(), b._to_bpoly())
    mono = (min(ma[0], mb[0]), min(ma[1], mb[1]))
    return _sign_normalize(LaurentQT._from_bpoly(g, *mono))


def _sign_normalize(p: LaurentQT) -> LaurentQT:
    if p.is_zero():
        return p
    c = p.int_content()
    if p.leading()[1] < 0:
        c = -c
    return p if c == 1 else LaurentQT._raw({k: v // c for k, v in p._terms.items()})


def divexact_qt(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    """Exact quotient ``a / b`` for integer-coefficient Laurent polynomials."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return LaurentQT()
    if b.is_monomial():
        ((bq, bt), bc), = b._terms.items()
        r = {}
        for (q, t), c in a._terms.items():
            v = Fraction(c, bc) if isinstance(c, int) and isinstance(bc, int) else c / bc
            r[(q - bq, t - bt)] = _norm_coeff(v)
        return LaurentQT._raw(r)
    ma, mb = a.min_exponents(), b.min_exponents()
    try:
        qb = up.b_divexact(a._to_bpoly(), b._to_bpoly())
    except ArithmeticError as exc:
        raise ExactDivisionError(str(exc)) from None
    return LaurentQT._from_bpoly(qb, ma[0] - mb[0], ma[1] - mb[1])


# ---------------------------------------------------------------------------
# RatQT
# ---------------------------------------------------------------------------

_ONE_P = LaurentQT.const(1)
_ZERO_P = LaurentQT()


class RatQT:
    """Element of Q(q, t) kept in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, LaurentQT):
            num = LaurentQT.const(num)
        if not isinstance(den, LaurentQT):
            den = LaurentQT.const(den)
        if den.is_zero():
            raise ZeroDivisionError("RatQT with zero denominator")
        n, d = _canonicalize(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, qe=0, te=0, c=1):
        return cls(LaurentQT.monomial(qe, te, c))

    # -- predicates
    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        """True when the denominator is a constant."""
        return self.den.is_const()

    def is_monomial(self):
        return self.num.is_monomial() and self.den.is_const()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatQT):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentQT)):
            return self == RatQT(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic
    def __add__(self, other):
        if not isinstance(other, RatQT):
            other = _coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.is_const() and other.den.is_const():
            d1, d2 = self.den.const_value(), other.den.const_value()
            if d1 == d2:
                return _from_int_parts(self.num + other.num, d1)
            return _from_int_parts(self.num * d2 + other.num * d1, d1 * d2)
        if self.den == other.den:
            return RatQT(self.num + other.num, self.den)
        return RatQT(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatQT._raw(-self.num, self.den)

    def __sub__(self, other):
        if not isinstance(other, RatQT):
            other = _coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatQT):
            other = _coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return RATQT_ZERO
        if self.den.is_const() and other.den.is_const():
            return _from_int_parts(self.num * other.num, self.den.const_value() * other.den.const_value())
        return RatQT(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q,t)")
        return RatQT(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RatQT):
            other = _coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(q,t)")
        if other.is_monomial():
            ((qe, te), c), = other.num._terms.items()
            inv = RatQT._raw(LaurentQT.monomial(-qe, -te, 1), LaurentQT.const(1))
            return self * inv * RatQT(other.den.const_value(), c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        r = RATQT_ONE
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- substitution
    def specialize_t(self, rule):
        """Apply one of the named t-substitutions; see :func:`specialize_t`."""
        return specialize_t(self, rule)

    def substitute_t_monomial(self, sign, dq, dt):
        num = self.num.map_monomial(sign, dq, dt)
        den = self.den.map_monomial(sign, dq, dt)
        if den.is_zero():
            raise PoleError("substitution makes the denominator vanish")
        return RatQT(num, den)

    def mirror_q(self):
        return RatQT(self.num.swap_q_inverse(), self.den.swap_q_inverse())

    def as_laurent(self) -> LaurentQT:
        if not self.den.is_const():
            raise ExactDivisionError("not a Laurent polynomial", self)
        d = self.den.const_value()
        return self.num if d == 1 else self.num * Fraction(1, d)

    def as_laurent_q(self) -> LaurentQ:
        p = self.as_laurent()
        if any(te for _, te in p._terms):
            raise ValueError("value still depends on t")
        return LaurentQ({qe: c for (qe, _), c in p._terms.items()})

    # -- serialization
    def to_text(self):
        if self.den == _ONE_P:
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(LaurentQT.from_json(data["num"]), LaurentQT.from_json(data["den"]))

    def __repr__(self):
        return f"RatQT({self.to_text()})"

    __str__ = to_text


def _coerce(x):
    if isinstance(x, RatQT):
        return x
    if isinstance(x, LaurentQT):
        return RatQT(x)
    if isinstance(x, int):
        return RatQT._raw(LaurentQT.const(x), _ONE_P)
    return RatQT(LaurentQT.const(x))


def _from_int_parts(num: LaurentQT, d: int) -> RatQT:
    """Canonical ``num / d`` for a Laurent ``num`` and nonzero integer ``d``."""
    if num.is_zero():
        return RATQT_ZERO
    cd = num.content_denominator()
    if cd != 1:
        num = num * cd
        d = d * cd
    g = gcd(num.int_content(), d)
    if d < 0:
        g = -g
    if g != 1:
        num = LaurentQT._raw({k: v // g for k, v in num._terms.items()})
        d //= g
    return RatQT._raw(num, _ONE_P if d == 1 else LaurentQT.const(d))


def _canonicalize(num: LaurentQT, den: LaurentQT):
    if num.is_zero():
        return _ZERO_P, _ONE_P
    # integer coefficients on both sides
    m = lcm(num.content_denominator(), den.content_denominator())
    if m != 1:
        num = num * m
        den = den * m
    # Laurent monomial content of den moves to num
    mq, mt = den.min_exponents()
    if mq or mt:
        den = den.shift(-mq, -mt)
        num = num.shift(-mq, -mt)
    if not den.is_const():
        nq, nt = num.min_exponents()
        if not num.is_monomial():
            g = gcd_qt(num.shift(-nq, -nt), den)
            if not g.is_const():
                num = divexact_qt(num, g)
                den = divexact_qt(den, g)
    # scalar normalization
    c = gcd(num.int_content(), den.int_content())
    if den.leading()[1] < 0:
        c = -c
    if c != 1:
        num = LaurentQT._raw({k: v // c for k, v in num._terms.items()})
        den = LaurentQT._raw({k: v // c for k, v in den._terms.items()})
    return num, den


RATQT_ZERO = RatQT._raw(_ZERO_P, _ONE_P)
RATQT_ONE = RatQT._raw(LaurentQT.const(1), _ONE_P)
q = RatQT.monomial(1, 0)
t = RatQT.monomial(0, 1)


def ratqt_arith(a: RatQT, b: RatQT, op: str) -> RatQT:
    """Field operation ``op`` in {'add', 'sub', 'mul', 'div'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


# named substitutions t -> sign * q^dq * t^dt; 'drop_t' means the image has no t
SPECIALIZATIONS = {
    "t=-q^2": (-1, 2, 0),
    "t=-q^2/t": (-1, 2, -1),
    "t=1": (1, 0, 0),
    "t=-1/t": (-1, 0, -1),
}


def specialize_t(f: RatQT, rule: str) -> RatQT:
    """Exact substitution for t; raises :class:`PoleError` at a pole."""
    try:
        sign, dq, dt = SPECIALIZATIONS[rule]
    except KeyError:
        raise ValueError(f"unknown specialization {rule!r}") from None
    return f.substitute_t_monomial(sign, dq, dt)


# ---------------------------------------------------------------------------
# LaurentQ
# ---------------------------------------------------------------------------


class LaurentQ:
    """Laurent polynomial in q alone, rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {} if terms is None else {k: _norm_coeff(v) for k, v in terms.items() if v}

    @classmethod
    def monomial(cls, e=0, c=1):
        return cls({e: c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, LaurentQ):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, LaurentQ):
            other = LaurentQ({0: other})
        r = dict(self._terms)
        for k, v in other._terms.items():
            r[k] = r.get(k, 0) + v
        return LaurentQ(r)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentQ):
            return LaurentQ({k: v * other for k, v in self._terms.items()})
        r = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                r[a + b] = r.get(a + b, 0) + x * y
        return LaurentQ(r)

    __rmul__ = __mul__

    def shift(self, e):
        return LaurentQ({k + e: v for k, v in self._terms.items()})

    def mirror(self):
        """Substitute q -> 1/q."""
        return LaurentQ({-k: v for k, v in self._terms.items()})

    def to_text(self):
        if not self._terms:
            return "0"
        return _join_terms([_term_text(c, (("q", e),)) for e, c in self.items()])

    def to_json(self):
        return [[e, 0, _fmt_coeff(c)] for e, c in self.items()]

    def to_ratqt(self) -> RatQT:
        return RatQT(LaurentQT({(e, 0): c for e, c in self._terms.items()}))

    def __repr__(self):
        return f"LaurentQ({self.to_text()})"


def monomial_ratio(f: LaurentQ, g: LaurentQ):
    """Return ``(sign, k)`` with ``f == sign * q^k * g``, or ``None``."""
    if g.is_zero():
        raise ZeroDivisionError("monomial_ratio with zero reference")
    if f.is_zero() or len(f._terms) != len(g._terms):
        return None
    fmin, gmin = min(f._terms), min(g._terms)
    k = fmin - gmin
    ratio = Fraction(f._terms[fmin]) / Fraction(g._terms[gmin])
    if ratio not in (1, -1):
        return None
    sign = int(ratio)
    for e, c in g._terms.items():
        if f._terms.get(e + k) != sign * c:
            return None
    return sign, k


# ---------------------------------------------------------------------------
# LaurentX
# ---------------------------------------------------------------------------


class LaurentX:
    """Laurent polynomial in X with RatQT coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        if terms:
            for k, v in terms.items():
                if not isinstance(v, RatQT):
                    v = _coerce(v)
                if not v.is_zero():
                    self._terms[k] = v

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, k=0, c=1):
        return cls({k: c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, k):
        return self._terms.get(k, RATQT_ZERO)

    def is_zero(self):
        return not self._terms

    def degree(self):
        return max(self._terms)

    def low_degree(self):
        return min(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentX):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        r = dict(self._terms)
        for k, v in other._terms.items():
            w = r[k] + v if k in r else v
            if w.is_zero():
                r.pop(k, None)
            else:
                r[k] = w
        return LaurentX._raw(r)

    def __neg__(self):
        return LaurentX._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, RatQT):
            c = _coerce(c)
        if c.is_zero():
            return LaurentX()
        return LaurentX._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentX):
            return self.scale(other)
        r = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                r[a + b] = r[a + b] + x * y if a + b in r else x * y
        return LaurentX._raw({k: v for k, v in r.items() if not v.is_zero()})

    __rmul__ = scale

    def shift(self, k):
        """Multiply by X^k."""
        return LaurentX._raw({e + k: v for e, v in self._terms.items()})

    def invert_variable(self):
        """f(X) -> f(X^-1)."""
        return LaurentX._raw({-e: v for e, v in self._terms.items()})

    def q_dilate(self, power):
        """f(X) -> f(q^power X)."""
        return LaurentX._raw({e: v * RatQT._raw(LaurentQT.monomial(power * e, 0), _ONE_P)
                              for e, v in self._terms.items()})

    def is_symmetric(self):
        return all(self._terms.get(-e) == v for e, v in self._terms.items())

    def map_coeffs(self, fn):
        return LaurentX({k: fn(v) for k, v in self._terms.items()})

    def common_denominator(self) -> LaurentQT:
        """Least common multiple of the coefficient denominators."""
        d = _ONE_P
        for v in self._terms.values():
            if v.den.is_const():
                continue
            if d == _ONE_P:
                d = v.den
            elif d != v.den:
                g = gcd_qt(d, v.den)
                d = divexact_qt(d * v.den, g)
        return d

    def eval_at(self, point: RatQT) -> RatQT:
        return eval_at(self, point)

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            x = "" if e == 0 else ("X" if e == 1 else f"X^{e}")
            if c.den == _ONE_P and c.num.is_monomial():
                ((qe, te), cc), = c.num._terms.items()
                parts.append(_term_text(cc, (("q", qe), ("t", te), ("X", e))))
            else:
                parts.append(f"({c.to_text()})" + (f"*{x}" if x else ""))
        return _join_terms(parts)

    def to_json(self):
        return [[e, c.to_json()] for e, c in self.items()]

    def __repr__(self):
        return f"LaurentX({self.to_text()})"


def eval_at(v: LaurentX, point: RatQT) -> RatQT:
    """Substitute X = point."""
    if not isinstance(point, RatQT):
        point = _coerce(point)
    if point.is_zero():
        raise ZeroDivisionError("evaluation point must be invertible")
    if point.is_monomial() and all(c.den == _ONE_P for c in v._terms.values()):
        # fast path: everything stays a Laurent polynomial
        ((pq, pt), pc), = point.num._terms.items()
        pc = Fraction(pc, point.den.const_value())
        acc = _ZERO_P
        for e, c in v._terms.items():
            acc = acc + c.num * LaurentQT.monomial(pq * e, pt * e, pc ** e)
        return RatQT(acc)
    total = RATQT_ZERO
    for e, c in v._terms.items():
        total = total + c * point ** e
    return total


def exact_divide_X(f: LaurentX, g: LaurentX) -> LaurentX:
    """Return h with f = g*h; raises :class:`ExactDivisionError` otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if f.is_zero():
        return LaurentX()
    glo, ghi = g.low_degree(), g.degree()
    lead = g.coeff(ghi)
    inv = lead.inverse()
    rem = dict(f._terms)
    quot = {}
    # quotient exponents are confined to [low(f) - low(g), deg(f) - deg(g)]
    floor = f.low_degree() - glo
    while rem and max(rem) - ghi >= floor:
        top = max(rem)
        k = top - ghi
        c = rem[top] * inv
        quot[k] = c
        for e, gc in g._terms.items():
            w = rem.get(e + k, RATQT_ZERO) - gc * c
            if w.is_zero():
                rem.pop(e + k, None)
            else:
                rem[e + k] = w
    if rem:
        raise ExactDivisionError("inexact division in X", LaurentX._raw(rem))
    return LaurentX._raw(quot)
