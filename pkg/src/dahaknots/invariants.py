"""Two-variable knot polynomials built from the SL2(Z) action on the spherical DAHA.

Families
--------
cherednik   P_{n,r,s}(q,t): torus knots, standard representation, X = t
sign        J_{n,r,s}(q,t): torus knots, sign representation on delta_t
iterated    J_n(r,s;q,t):   iterated cables, twisted right module, Macdonald basis
cd          JD_{n,r,s}(q,t): iterated cables from Newton pairs, no framing factors

Cable pairs are written ``(r_i, s_i)`` with ``r_i`` the number of strands of
the i-th cable and pair 1 the innermost; e.g. ``((2,3),(2,5))`` is the (2,5)
cable of the trefoil.  The SL2(Z) element for a pair is chosen with
``gamma (0,1)^T = (s_i, r_i)^T``, which matches the cabling sum formula in
:mod:`dahaknots.joracle`.  For the torus families the argument order
``(r, s)`` is used as given.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .exactalg import RATQT_ONE, RATQT_ZERO, LaurentQT, LaurentX, RatQT, eval_at, t
from .hword import gamma_apply, phi, y_power_sum
from .joracle import NEWTON, TOPOLOGICAL, newton_to_topological
from .macdonald import SymPoly, expand_in_macdonald, macdonald_poly
from .polyrep import (
    DELTA_T,
    SIGN_FLAVOR,
    STANDARD_FLAVOR,
    act_word_laurent,
    eval_sign,
)

CHEREDNIK = "cherednik"
SIGN = "sign"
ITERATED = "iterated"
CD = "cd"
FAMILIES = (CHEREDNIK, SIGN, ITERATED, CD)


@dataclass(frozen=True)
class CableSpec:
    pairs: tuple
    convention: str = TOPOLOGICAL

    def __post_init__(self):
        pairs = tuple((int(r), int(s)) for r, s in self.pairs)
        if not pairs:
            raise ValueError("cable specification needs at least one pair")
        for r, s in pairs:
            if gcd(r, s) != 1:
                raise ValueError(f"pair ({r},{s}) is not coprime")
        if self.convention not in (TOPOLOGICAL, NEWTON):
            raise ValueError(f"unknown convention {self.convention!r}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def r(self):
        return tuple(p[0] for p in self.pairs)

    @property
    def s(self):
        return tuple(p[1] for p in self.pairs)

    def topological(self) -> "CableSpec":
        if self.convention == TOPOLOGICAL:
            return self
        a = newton_to_topological(self.r, self.s)
        return CableSpec(tuple(zip(self.r, a)), TOPOLOGICAL)


@dataclass(frozen=True)
class InvariantResult:
    value: RatQT
    family: str
    n: int
    spec: CableSpec


def neg_q_power(e: int) -> RatQT:
    """(-q)^e as a signed monomial."""
    return RatQT(LaurentQT.monomial(e, 0, -1 if e % 2 else 1))


def _check(n, r=None, s=None):
    if n < 1:
        raise ValueError("color n must be >= 1")
    if r is not None and gcd(r, s) != 1:
        raise ValueError(f"({r},{s}) is not coprime")


# ---------------------------------------------------------------------------
# images of Y^k + Y^-k, memoized per (gamma, k)
# ---------------------------------------------------------------------------

_ONE_VEC = {0: LaurentQT.const(1)}
_DELTA_VEC = {k: c.as_laurent() for k, c in DELTA_T.terms.items()}


def _sum_vecs(parts):
    out = {}
    for vec in parts:
        for k, c in vec.items():
            if k in out:
                v = out[k] + c
                if v.is_zero():
                    del out[k]
                else:
                    out[k] = v
            else:
                out[k] = c
    return out


# DAHAKNOTS_CACHE_SIZE bounds the memo of gamma images (0 disables it)
_CACHE_SIZE = int(os.environ.get("DAHAKNOTS_CACHE_SIZE", "4096"))


@lru_cache(maxsize=_CACHE_SIZE)
def _image(r: int, s: int, k: int, variant: int, mode: str) -> dict:
    """Vector for gamma_{r,s}(Y^k + Y^-k) in one of three settings.

    mode 'left'  : acts on 1, standard flavor
    mode 'sign'  : acts on delta_t, sign flavor
    mode 'right' : 1 . gamma(...), i.e. phi(gamma(...)) acting on 1
    """
    elem = gamma_apply(r, s, y_power_sum(k), variant)
    if mode == "right":
        elem = phi(elem)
    base, flavor = {
        "left": (_ONE_VEC, STANDARD_FLAVOR),
        "right": (_ONE_VEC, STANDARD_FLAVOR),
        "sign": (_DELTA_VEC, SIGN_FLAVOR),
    }[mode]
    parts = []
    for w, c in elem.terms.items():
        # gamma maps words to single words with monomial q-scalars
        coeff = c.as_laurent()
        parts.append({e: v * coeff for e, v in act_word_laurent(w, base, flavor).items()})
    return _sum_vecs(parts)


def _combine(coeffs: dict, vectors) -> LaurentX:
    """sum_j coeffs[j] * vectors(j) with RatQT coefficients."""
    out = LaurentX()
    for j, c in coeffs.items():
        if c.is_zero():
            continue
        vec = vectors(j)
        out = out + LaurentX({e: RatQT(v) * c for e, v in vec.items()})
    return out


def _as_sym(v: LaurentX) -> SymPoly:
    if not v.is_symmetric():
        raise AssertionError("intermediate module element is not symmetric")
    return SymPoly.from_laurent(v)


# ---------------------------------------------------------------------------
# torus families
# ---------------------------------------------------------------------------


def cherednik_torus(n: int, r: int, s: int, variant: int = 0) -> RatQT:
    """(-q)^{rs(n^2-1)} eps_c(gamma_{r,s}(p_{n-1}(Y+1/Y)) . 1), eps_c: X -> t."""
    _check(n, r, s)
    p = macdonald_poly(n - 1)
    total = RATQT_ZERO
    for j, c in p.coeffs.items():
        val = eval_at(LaurentX({e: RatQT(v) for e, v in _image(r, s, j, variant, "left").items()}), t)
        total = total + c * val
    return total * neg_q_power(r * s * (n * n - 1))


@lru_cache(maxsize=None)
def sign_eigenbasis(n: int) -> SymPoly:
    """Monic g_n with y (g_n delta_t) = mu_n g_n delta_t in the sign flavor.

    Solved by the same triangular elimination as the Macdonald polynomials,
    using the operator g -> (y (g delta_t)) / delta_t on the m-basis.
    """
    if n == 0:
        return SymPoly.m(0)
    cols = {k: _sign_y_column(k) for k in range(n + 1)}
    lam = cols[n].coeff(n)
    a = {n: RATQT_ONE}
    for j in range(n - 2, -1, -2):
        acc = RATQT_ZERO
        for i in range(j + 1, n + 1):
            if i in a:
                acc = acc + a[i] * cols[i].coeff(j)
        if not acc.is_zero():
            a[j] = -acc / (cols[j].coeff(j) - lam)
    return SymPoly(a)


@lru_cache(maxsize=None)
def _sign_y_column(k: int) -> SymPoly:
    from .exactalg import exact_divide_X
    from .hword import Y_WORD
    from .polyrep import act

    v = act(Y_WORD, SymPoly.m(k).to_laurent() * DELTA_T, SIGN_FLAVOR)
    return _as_sym(exact_divide_X(v, DELTA_T))


def sign_torus(n: int, r: int, s: int, variant: int = 0, basis=None) -> RatQT:
    """(-q)^{rs(n^2-1)} eps(gamma_{r,s}(g_{n-1}(y)) delta_t).

    ``g`` defaults to :func:`sign_eigenbasis`; pass ``basis`` (a function of
    the index) to use another family such as the sign Macdonald polynomials.
    """
    _check(n, r, s)
    g = (basis or sign_eigenbasis)(n - 1)
    total = RATQT_ZERO
    for j, c in g.coeffs.items():
        vec = LaurentX({e: RatQT(v) for e, v in _image(r, s, j, variant, "sign").items()})
        total = total + c * eval_sign(vec)
    return total * neg_q_power(r * s * (n * n - 1))


# ---------------------------------------------------------------------------
# iterated cables
# ---------------------------------------------------------------------------


def _stage_topological(g: SymPoly, strands: int, slope: int, variant: int) -> SymPoly:
    a, b = slope, strands
    expansion = expand_in_macdonald(g)
    coeffs = {}
    for k, c in expansion.items():
        scale = c * neg_q_power(a * b * k * (k + 2))
        for j, pj in macdonald_poly(k).coeffs.items():
            coeffs[j] = coeffs[j] + scale * pj if j in coeffs else scale * pj
    return _as_sym(_combine(coeffs, lambda j: _image(a, b, j, variant, "right")))


def _stage_plain(g: SymPoly, strands: int, slope: int, variant: int) -> SymPoly:
    return _as_sym(_combine(g.coeffs, lambda j: _image(slope, strands, j, variant, "right")))


def _run_stages(n, pairs, stage, variant):
    g = macdonald_poly(n - 1)
    for strands, slope in reversed(pairs):
        g = stage(g, strands, slope, variant)
    return eval_at(g.to_laurent(), t)


def iterated_topological(n: int, spec, variant: int = 0) -> RatQT:
    """J_n(r, s; q, t) for topological cable pairs (innermost first)."""
    _check(n)
    spec = _as_spec(spec, TOPOLOGICAL)
    if spec.convention != TOPOLOGICAL:
        raise ValueError("iterated_topological expects topological pairs")
    return _run_stages(n, spec.pairs, _stage_topological, variant)


def cd_newton(n: int, spec, variant: int = 0) -> RatQT:
    """JD_{n,r,s}(q, t) for Newton pairs: gamma_i applied to the whole element, no prefactors."""
    _check(n)
    spec = _as_spec(spec, NEWTON)
    return _run_stages(n, spec.pairs, _stage_plain, variant)


def _as_spec(spec, default_convention):
    if isinstance(spec, CableSpec):
        return spec
    return CableSpec(tuple(spec), default_convention)


def compute(family: str, n: int, spec: CableSpec, variant: int = 0) -> InvariantResult:
    if family in (CHEREDNIK, SIGN):
        if len(spec.pairs) != 1:
            raise ValueError("torus families take exactly one pair")
        (r, s), = spec.pairs
        fn = cherednik_torus if family == CHEREDNIK else sign_torus
        value = fn(n, r, s, variant)
    elif family == ITERATED:
        value = iterated_topological(n, spec.topological(), variant)
    elif family == CD:
        value = cd_newton(n, spec, variant)
    else:
        raise ValueError(f"unknown family {family!r}")
    return InvariantResult(value, family, n, spec)
