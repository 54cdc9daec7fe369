"""Invariant suites shared by ``dahaknots selftest`` and the test-suite.

Every check returns True/False and raises nothing on a plain failure.
"""
from __future__ import annotations

import time

from .exactalg import LaurentX, q, t
from .hword import X_WORD, Y_WORD, Z_WORD, HElement, decompose_gamma
from .joracle import oracle_jones, unknot_jones
from .macdonald import SymPoly, chebyshev_S, eigenvalue, macdonald_operator, macdonald_poly, power_to_sym
from .polyrep import DELTA_T, SIGN_FLAVOR, STANDARD_FLAVOR, act, idempotent_project

FLAVORS = (STANDARD_FLAVOR, SIGN_FLAVOR)


def _w(*letters, c=1):
    return HElement({tuple(letters): c})


def basis_vectors(bound=6):
    return [LaurentX({d: 1}) for d in range(-bound, bound + 1)]


def symmetric_vectors(flavor, top=3):
    base = [SymPoly.m(d).to_laurent() for d in range(top + 1)]
    if flavor is SIGN_FLAVOR:
        base = [b * DELTA_T for b in base]
    return base


def _kills(elem: HElement, vectors, flavor) -> bool:
    return all(act(elem, v, flavor).is_zero() for v in vectors)


def daha_relations(flavor, bound=6) -> dict:
    """The four defining relations as operator identities on X^d, |d| <= bound."""
    vs = basis_vectors(bound)
    tinv = t.inverse()
    T = _w(("T", 1))
    quad = T * T - T.scale(t - tinv) - HElement.scalar(1)  # (T - t)(T + 1/t)
    return {
        "TXT=X^-1": _kills(_w(("T", 1), ("X", 1), ("T", 1)) - _w(("X", -1)), vs, flavor),
        "TY^-1T=Y": _kills(_w(("T", 1), ("Y", -1), ("T", 1)) - _w(("Y", 1)), vs, flavor),
        "XY=q^2YXT^2": _kills(_w(("X", 1), ("Y", 1)) - _w(("Y", 1), ("X", 1), ("T", 2), c=q ** 2), vs, flavor),
        "(T-t)(T+1/t)=0": _kills(quad, vs, flavor),
    }


def _qbracket(a, b):
    return a * b * q - b * a * q.inverse()


def bq_relations(flavor) -> dict:
    vs = symmetric_vectors(flavor)
    k = q ** 2 - q ** -2
    x, y, z = X_WORD, Y_WORD, Z_WORD
    return {
        "[x,y]_q=(q^2-q^-2)z": _kills(_qbracket(x, y) - z.scale(k), vs, flavor),
        "[y,z]_q=(q^2-q^-2)x": _kills(_qbracket(y, z) - x.scale(k), vs, flavor),
        "[z,x]_q=(q^2-q^-2)y": _kills(_qbracket(z, x) - y.scale(k), vs, flavor),
    }


CASIMIR_SCALAR = (t / q - q / t) ** 2 + (q + q.inverse()) ** 2


def casimir(flavor) -> bool:
    x, y, z = X_WORD, Y_WORD, Z_WORD
    cas = (x * x).scale(q ** 2) + (y * y).scale(q ** -2) + (z * z).scale(q ** 2) - (x * y * z).scale(q)
    return all((act(cas, v, flavor) - v.scale(CASIMIR_SCALAR)).is_zero() for v in symmetric_vectors(flavor))


def idempotency(flavor, bound=4) -> bool:
    for v in basis_vectors(bound):
        once = idempotent_project(v, flavor)
        if idempotent_project(once, flavor) != once:
            return False
    return True


def macdonald_eigen(n_max=8) -> bool:
    return all(macdonald_operator(macdonald_poly(n)) == macdonald_poly(n).scale(eigenvalue(n)) for n in range(n_max + 1))


def macdonald_chebyshev(n_max=8) -> bool:
    return all(macdonald_poly(n).specialize_t("t=-q^2") == power_to_sym(chebyshev_S(n)) for n in range(n_max + 1))


def gamma_columns(bound=12) -> bool:
    from math import gcd

    for r in range(-bound, bound + 1):
        for s in range(-bound, bound + 1):
            if gcd(r, s) != 1:
                continue
            w = decompose_gamma(r, s)
            if w.column() != (r, s) or w.determinant() != 1:
                return False
    return True


def oracle_sanity() -> bool:
    specs = [((2, 3),), ((3, 2),), ((2, 5),), ((2, -3),), ((2, 3), (2, 5)), ((2, 3), (2, -5)), ((2, 3), (3, 2))]
    if any(oracle_jones(1, s) != 1 for s in specs):
        return False
    # (-1)^(m-1) (q^2m - q^-2m)/(q^2 - q^-2), checked as a product
    for m in range(1, 7):
        lhs = unknot_jones(m).to_ratqt() * (q ** 2 - q ** -2)
        rhs = (q ** (2 * m) - q ** (-2 * m)) * (1 if m % 2 else -1)
        if lhs != rhs:
            return False
    return True


def _flavored(name, fn):
    return [(f"{name} [{fl.tag}]", (lambda fl=fl: fn(fl))) for fl in FLAVORS]


def checks():
    out = []
    out += _flavored("daha relations", lambda fl: all(daha_relations(fl).values()))
    out += _flavored("B'_q relations", lambda fl: all(bq_relations(fl).values()))
    out += _flavored("casimir scalar", casimir)
    out += _flavored("idempotent e", idempotency)
    out += [
        ("macdonald eigen-relations n<=8", macdonald_eigen),
        ("p_n at t=-q^2 is S_n, n<=8", macdonald_chebyshev),
        ("gamma words, |r|,|s|<=12", gamma_columns),
        ("oracle sanity", oracle_sanity),
    ]
    return out


def run_all():
    rows = []
    for name, fn in checks():
        t0 = time.perf_counter()
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        rows.append((name, ok, time.perf_counter() - t0))
    return rows
