"""Colored Jones polynomials of iterated torus knots from the cabling sum formula.

This is deliberately independent of the Hecke-algebra code: it only uses
:class:`LaurentQ` arithmetic.  Colors follow the normalization J_1 = 1,
J_0 = 0, J_{-m} = -J_m.

Cable pairs ``(r, s)`` are given with ``r`` the number of strands of the
cable; :func:`cable_step` uses the sum-formula naming where the strand count
is the second entry, so :func:`oracle_jones` swaps them.
"""
from __future__ import annotations

import threading
from math import gcd

from .exactalg import LaurentQ

TOPOLOGICAL = "topological"
NEWTON = "newton"


def unknot_jones(m: int) -> LaurentQ:
    """(-1)^(m-1) (q^2m - q^-2m) / (q^2 - q^-2)."""
    if m == 0:
        return LaurentQ()
    if m < 0:
        return -unknot_jones(-m)
    sign = 1 if m % 2 else -1
    # the quotient is q^(2m-2) + q^(2m-6) + ... + q^(2-2m)
    return LaurentQ({2 * m - 2 - 4 * j: sign for j in range(m)})


def _mono(e: int, sign: int = 1) -> LaurentQ:
    return LaurentQ({e: sign})


def neg_q_power(e: int) -> LaurentQ:
    """(-q)^e."""
    return _mono(e, -1 if e % 2 else 1)


def cable_step(r: int, s: int, inner, n: int, check_parity: bool = True) -> LaurentQ:
    """(-q)^{rs(n^2-1)} sum_u q^{-(r s u^2 + 2 r u)} inner(s u + 1), u = -(n-1), ..., n-1 step 2."""
    if gcd(r, s) != 1:
        raise ValueError(f"cable ({r},{s}) is not coprime")
    if n < 1:
        raise ValueError("color must be >= 1")
    acc = LaurentQ()
    parity = None
    for u in range(-(n - 1), n, 2):
        color = s * u + 1
        if check_parity:
            if parity is None:
                parity = color % 2
            elif color % 2 != parity:
                raise AssertionError("inner colors of one cable step changed parity")
        acc = acc + inner(color).shift(-(r * s * u * u + 2 * r * u))
    return acc * neg_q_power(r * s * (n * n - 1))


def newton_to_topological(r, s):
    """a_1 = s_1, a_{i+1} = s_{i+1} + r_i r_{i+1} a_i."""
    if len(r) != len(s) or not r:
        raise ValueError("need two nonempty sequences of equal length")
    a = [s[0]]
    for i in range(1, len(r)):
        a.append(s[i] + r[i - 1] * r[i] * a[-1])
    return a


class ColorTable:
    """Memo of J_m for the knots obtained from the first ``depth`` cable pairs."""

    def __init__(self, pairs):
        self.pairs = tuple(tuple(p) for p in pairs)
        self.memo = {}
        self._lock = threading.RLock()

    def jones(self, depth: int, m: int) -> LaurentQ:
        key = (depth, m)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        with self._lock:
            if key in self.memo:
                return self.memo[key]
            if m == 0:
                val = LaurentQ()
            elif m < 0:
                val = -self.jones(depth, -m)
            elif depth == 0:
                val = unknot_jones(m)
            else:
                strands, slope = self.pairs[depth - 1]
                val = cable_step(slope, strands, lambda c: self.jones(depth - 1, c), m)
            self.memo[key] = val
            return val


def oracle_jones(n: int, pairs, convention: str = TOPOLOGICAL) -> LaurentQ:
    """J_n of the iterated cable described by ``pairs`` (innermost first)."""
    pairs = [tuple(p) for p in pairs]
    if not pairs:
        raise ValueError("empty cable specification")
    for r, s in pairs:
        if gcd(r, s) != 1:
            raise ValueError(f"pair ({r},{s}) is not coprime")
    if convention == NEWTON:
        rs = [p[0] for p in pairs]
        a = newton_to_topological(rs, [p[1] for p in pairs])
        pairs = list(zip(rs, a))
    elif convention != TOPOLOGICAL:
        raise ValueError(f"unknown convention {convention!r}")
    table = ColorTable(pairs)
    return table.jones(len(pairs), n)
