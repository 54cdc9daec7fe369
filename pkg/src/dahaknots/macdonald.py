"""Type A1 Macdonald polynomials and related symmetric-function utilities.

Symmetric Laurent polynomials are stored in the monomial basis
``m_0 = 1, m_k = X^k + X^-k``.
"""
from __future__ import annotations

import threading

from .exactalg import (
    RATQT_ONE,
    RATQT_ZERO,
    ExactDivisionError,
    LaurentX,
    RatQT,
    exact_divide_X,
    q,
    specialize_t,
    t,
)
from .hword import HElement, y_power_sum


class SymPoly:
    """sum_k c_k m_k with RatQT coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {}
        for k, v in (coeffs or {}).items():
            if k < 0:
                raise ValueError("m-basis index must be >= 0")
            if not isinstance(v, RatQT):
                v = RatQT(v)
            if not v.is_zero():
                self._c[k] = v

    @classmethod
    def m(cls, k: int, c=1):
        return cls({k: c})

    @property
    def coeffs(self):
        return dict(self._c)

    def coeff(self, k):
        return self._c.get(k, RATQT_ZERO)

    def items(self):
        return sorted(self._c.items())

    def degree(self):
        return max(self._c, default=-1)

    def is_zero(self):
        return not self._c

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        r = dict(self._c)
        for k, v in other._c.items():
            r[k] = r[k] + v if k in r else v
        return SymPoly(r)

    def __neg__(self):
        return SymPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return SymPoly({k: v * c for k, v in self._c.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return SymPoly.from_laurent(self.to_laurent() * other.to_laurent())
        return self.scale(other)

    __rmul__ = scale

    def map_coeffs(self, fn):
        return SymPoly({k: fn(v) for k, v in self._c.items()})

    def specialize_t(self, rule):
        return self.map_coeffs(lambda c: specialize_t(c, rule))

    def to_laurent(self) -> LaurentX:
        terms = {}
        for k, c in self._c.items():
            if k == 0:
                terms[0] = c
            else:
                terms[k] = c
                terms[-k] = c
        return LaurentX(terms)

    @classmethod
    def from_laurent(cls, f: LaurentX) -> "SymPoly":
        if not f.is_symmetric():
            raise ValueError("Laurent polynomial is not symmetric under X -> 1/X")
        return cls({k: c for k, c in f.terms.items() if k >= 0})

    def to_y_element(self) -> HElement:
        """Substitute m_k -> Y^k + Y^-k."""
        out = HElement()
        for k, c in self._c.items():
            out = out + y_power_sum(k).scale(c)
        return out

    def to_text(self):
        if not self._c:
            return "0"
        return " + ".join(f"({c.to_text()})*m{k}" for k, c in self.items())

    def to_json(self):
        return [[k, c.to_json()] for k, c in self.items()]

    def __repr__(self):
        return f"SymPoly({self.to_text()})"


# ---------------------------------------------------------------------------
# Chebyshev families (integer coefficients in the power basis of one variable)
# ---------------------------------------------------------------------------


def _shift_sub(a, b):
    """u*a - b for coefficient lists."""
    r = [0] + list(a)
    for i, c in enumerate(b):
        r[i] -= c
    while r and r[-1] == 0:
        r.pop()
    return r


def chebyshev_S(n: int) -> list:
    """S_n as a coefficient list; S_-1 = 0, S_0 = 1, S_{n+1} = u S_n - S_{n-1}."""
    if n < -1:
        raise ValueError("chebyshev_S needs n >= -1")
    prev, cur = [], [1]
    if n == -1:
        return prev
    for _ in range(n):
        prev, cur = cur, _shift_sub(cur, prev)
    return cur


def chebyshev_T(n: int) -> list:
    """T_n as a coefficient list; T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}."""
    if n < 0:
        raise ValueError("chebyshev_T needs n >= 0")
    prev, cur = [2], [0, 1]
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, _shift_sub(cur, prev)
    return cur


def power_to_sym(coeffs) -> SymPoly:
    """Evaluate a polynomial in x = X + 1/X into the m-basis."""
    acc = LaurentX()
    xpow = LaurentX({0: 1})
    x = LaurentX({1: 1, -1: 1})
    for c in coeffs:
        if c:
            acc = acc + xpow.scale(c)
        xpow = xpow * x
    return SymPoly.from_laurent(acc)


# ---------------------------------------------------------------------------
# Macdonald operator and polynomials
# ---------------------------------------------------------------------------

_XM1_MINUS_X = LaurentX({-1: 1, 1: -1})


def macdonald_operator(f: SymPoly) -> SymPoly:
    """Apply the difference operator (A(X) y-hat + A(1/X) y-hat^-1) to ``f``."""
    v = f.to_laurent()
    a_num = LaurentX({-1: t, 1: -t.inverse()})
    b_num = LaurentX({-1: t.inverse(), 1: -t})
    total = a_num * v.q_dilate(-2) + b_num * v.q_dilate(2)
    try:
        res = exact_divide_X(total, _XM1_MINUS_X)
    except ExactDivisionError:
        raise AssertionError("Macdonald operator produced a non-polynomial result") from None
    if not res.is_symmetric():
        raise AssertionError("Macdonald operator produced an asymmetric result")
    return SymPoly.from_laurent(res)


def eigenvalue(n: int) -> RatQT:
    return t * q ** (2 * n) + t.inverse() * q ** (-2 * n)


class MacdonaldTable:
    """Memo of p_n, filled under a lock so concurrent readers are safe."""

    def __init__(self):
        self._lock = threading.Lock()
        self._polys = {0: SymPoly.m(0)}
        self._op_cols = {}

    def _column(self, k):
        col = self._op_cols.get(k)
        if col is None:
            col = macdonald_operator(SymPoly.m(k))
            self._op_cols[k] = col
        return col

    def get(self, n: int) -> SymPoly:
        if n < 0:
            raise ValueError("Macdonald index must be >= 0")
        p = self._polys.get(n)
        if p is not None:
            return p
        with self._lock:
            if n not in self._polys:
                self._polys[n] = self._solve(n)
            return self._polys[n]

    def _solve(self, n):
        lam = eigenvalue(n)
        a = {n: RATQT_ONE}
        for j in range(n - 1, -1, -1):
            if (n - j) % 2:
                continue  # L preserves parity
            acc = RATQT_ZERO
            for i in range(j + 1, n + 1):
                if i in a:
                    acc = acc + a[i] * self._column(i).coeff(j)
            if acc.is_zero():
                continue
            pivot = self._column(j).coeff(j) - lam
            if pivot.is_zero():
                raise ZeroDivisionError(f"vanishing pivot at m_{j} while solving for p_{n}")
            a[j] = -acc / pivot
        return SymPoly(a)

    def clear(self):
        with self._lock:
            self._polys = {0: SymPoly.m(0)}
            self._op_cols = {}


TABLE = MacdonaldTable()


def macdonald_poly(n: int) -> SymPoly:
    return TABLE.get(n)


def sign_macdonald_poly(n: int) -> SymPoly:
    """p_n(x; q, -1/t)."""
    return macdonald_poly(n).specialize_t("t=-1/t")


def expand_in_macdonald(f: SymPoly) -> dict:
    """Coefficients c_n with f = sum c_n p_n."""
    out = {}
    rem = f
    while not rem.is_zero():
        k = rem.degree()
        c = rem.coeff(k)
        out[k] = c
        rem = rem - macdonald_poly(k).scale(c)
    return out


def from_macdonald(coeffs: dict) -> SymPoly:
    acc = SymPoly()
    for k, c in coeffs.items():
        acc = acc + macdonald_poly(k).scale(c)
    return acc
