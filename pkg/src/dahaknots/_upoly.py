"""Dense univariate and recursive bivariate integer polynomial kernels.

A univariate polynomial is a list of ints, index = degree, no trailing zeros
(the zero polynomial is ``[]``).  A bivariate polynomial is a list of
univariate polynomials indexed by the degree in the main variable.

These routines back the gcd and exact division used to canonicalize
fractions in :mod:`dahaknots.exactalg`.
"""
from __future__ import annotations

from math import gcd

UPoly = list  # list[int]
BPoly = list  # list[UPoly]


def trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def u_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    return trim(r)


def u_sub(a, b):
    n = max(len(a), len(b))
    r = [0] * n
    for i, c in enumerate(a):
        r[i] = c
    for i, c in enumerate(b):
        r[i] -= c
    return trim(r)


def u_scale(a, c):
    if not c:
        return []
    return [c * x for x in a]


def u_mul(a, b):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return trim(r)


def u_content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def u_divexact(a, b):
    """Quotient of ``a`` by ``b``; raises ``ArithmeticError`` if inexact over Z."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("inexact univariate division")
        return []
    qt = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        m, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact univariate division")
        qt[k - db] = m
        for j in range(db + 1):
            a[k - db + j] -= m * b[j]
    if any(a):
        raise ArithmeticError("inexact univariate division")
    return trim(qt)


def u_prem(a, b):
    """Pseudo-remainder of ``a`` by ``b`` (multiplies by lc(b) per step)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [lb * x for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        trim(r)
    return r


def u_primitive(a):
    c = u_content(a)
    if c == 0:
        return []
    if a[-1] < 0:
        c = -c
    return [x // c for x in a]


def u_gcd(a, b):
    """Primitive gcd over Z[x] with positive leading coefficient."""
    if not a:
        return u_primitive(b)
    if not b:
        return u_primitive(a)
    ca = gcd(u_content(a), u_content(b))
    a = u_primitive(a)
    b = u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = u_prem(a, b)
        a, b = b, u_primitive(r)
    return u_scale(u_primitive(a), ca)


def b_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def b_content(a):
    """Content in Z[y] of a polynomial in Z[y][x] (sign normalized)."""
    g = []
    for c in a:
        if c:
            g = u_gcd(g, c)
            if len(g) == 1 and g[0] == 1:
                break
    return g


def b_divexact_u(a, c):
    return [u_divexact(x, c) if x else [] for x in a]


def b_primitive(a):
    c = b_content(a)
    if not c:
        return []
    a = b_divexact_u(a, c)
    if a[-1][-1] < 0:
        a = [u_scale(x, -1) for x in a]
    return a


def b_prem(a, b):
    r = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [u_mul(lb, x) for x in r]
        for j in range(db + 1):
            if b[j]:
                r[shift + j] = u_sub(r[shift + j], u_mul(c, b[j]))
        b_trim(r)
    return r


def b_gcd(a, b):
    """Primitive-PRS gcd in Z[y][x]; result primitive, positive leading coefficient."""
    if not a:
        return b_primitive(b) if b else []
    if not b:
        return b_primitive(a)
    cont = u_gcd(b_content(a), b_content(b))
    a = b_primitive(a)
    b = b_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = b_prem(a, b)
        a, b = b, b_primitive(r)
    if b:
        # nonzero constant in x: the x-part of the gcd is trivial
        a = [[1]]
    else:
        a = b_primitive(a)
    res = [u_mul(cont, x) for x in a]
    if res[-1][-1] < 0:
        res = [u_scale(x, -1) for x in res]
    return res


def b_divexact(a, b):
    """Exact quotient in Z[y][x]; raises ``ArithmeticError`` if inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [list(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        if a:
            raise ArithmeticError("inexact bivariate division")
        return []
    qt = [[] for _ in range(len(a) - db)]
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        m = u_divexact(c, lb)
        qt[k - db] = m
        for j in range(db + 1):
            if b[j]:
                a[k - db + j] = u_sub(a[k - db + j], u_mul(m, b[j]))
    if any(a):
        raise ArithmeticError("inexact bivariate division")
    return b_trim(qt)
