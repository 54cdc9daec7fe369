"""Polynomial representations of the double affine Hecke algebra on C(q,t)[X^{+-1}].

Operators act on Laurent polynomials in X.  Internally a vector is a plain
``dict`` from X-exponent to :class:`LaurentQT`; every operator has Laurent
coefficients in q and t, so rational denominators of an input vector are
cleared once and restored at the end.

The sign flavor is the same operator family with t replaced by -1/t.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactalg import (
    RATQT_ONE,
    ExactDivisionError,
    LaurentQT,
    LaurentX,
    RatQT,
    _ONE_P,
    eval_at,
    exact_divide_X,
    t,
)
from .hword import HElement, phi

STANDARD = "standard"
SIGN = "sign"


@dataclass(frozen=True)
class RepFlavor:
    tag: str = STANDARD

    def __post_init__(self):
        if self.tag not in (STANDARD, SIGN):
            raise ValueError(f"unknown representation flavor {self.tag!r}")

    @property
    def param(self) -> LaurentQT:
        """The effective Hecke parameter as a Laurent monomial."""
        return LaurentQT.monomial(0, 1) if self.tag == STANDARD else LaurentQT.monomial(0, -1, -1)

    @property
    def param_inv(self) -> LaurentQT:
        return LaurentQT.monomial(0, -1) if self.tag == STANDARD else LaurentQT.monomial(0, 1, -1)

    @property
    def effective_parameter(self) -> RatQT:
        return RatQT(self.param)


STANDARD_FLAVOR = RepFlavor(STANDARD)
SIGN_FLAVOR = RepFlavor(SIGN)

DELTA_T = LaurentX({-1: t, 1: -t.inverse()})


# ---------------------------------------------------------------------------
# kernel on dict vectors
# ---------------------------------------------------------------------------


def _vadd(acc: dict, k: int, c: LaurentQT):
    if k in acc:
        v = acc[k] + c
        if v.is_zero():
            del acc[k]
        else:
            acc[k] = v
    elif not c.is_zero():
        acc[k] = c


def _div_x2_minus_1(w: dict) -> dict:
    """Exact quotient of ``w`` by X^2 - 1."""
    w = dict(w)
    h = {}
    floor = min(w) if w else 0
    while w:
        top = max(w)
        if top - 2 < floor:
            break
        c = w.pop(top)
        h[top - 2] = c
        _vadd(w, top - 2, c)
    if w:
        raise ExactDivisionError("T-hat: division by X^2-1 left a remainder")
    return h


def _that(v: dict, tau: LaurentQT, tau_inv: LaurentQT) -> dict:
    sv = {-k: c for k, c in v.items()}
    w = dict(sv)
    for k, c in v.items():
        _vadd(w, k, -c)
    h = _div_x2_minus_1(w)
    out = {}
    for k, c in sv.items():
        _vadd(out, k, c * tau)
    diff = tau - tau_inv
    for k, c in h.items():
        _vadd(out, k, c * diff)
    return out


def _that_inv(v: dict, tau, tau_inv) -> dict:
    out = _that(v, tau, tau_inv)
    shift = tau_inv - tau
    for k, c in v.items():
        _vadd(out, k, c * shift)
    return out


def _apply_letter(gen: str, exp: int, v: dict, tau, tau_inv) -> dict:
    if gen == "X":
        return {k + exp: c for k, c in v.items()}
    if gen == "T":
        f = _that if exp > 0 else _that_inv
        for _ in range(abs(exp)):
            v = f(v, tau, tau_inv)
        return v
    if gen == "Y":
        for _ in range(abs(exp)):
            if exp > 0:
                u = _that(v, tau, tau_inv)
                v = {-k: c.shift(2 * k) for k, c in u.items()}
            else:
                u = {-k: c.shift(2 * k) for k, c in v.items()}
                v = _that_inv(u, tau, tau_inv)
        return v
    raise ValueError(f"unknown generator {gen!r}")


def act_word_laurent(word, v: dict, flavor: RepFlavor = STANDARD_FLAVOR) -> dict:
    """Apply one word (rightmost letter first) to a Laurent-coefficient vector."""
    tau, tau_inv = flavor.param, flavor.param_inv
    for gen, exp in reversed(word):
        v = _apply_letter(gen, exp, v, tau, tau_inv)
        if not v:
            break
    return v


def _split(v: LaurentX):
    """(dict vector with LaurentQT coefficients, RatQT scale) with v = scale * vector."""
    den = v.common_denominator()
    scale = RatQT(_ONE_P, den)
    out = {}
    for k, c in v.terms.items():
        c2 = c * RatQT(den) if den != _ONE_P else c
        out[k] = c2.as_laurent()
    return out, scale


def _join(vec: dict, scale: RatQT) -> LaurentX:
    if scale == RATQT_ONE:
        return LaurentX({k: RatQT(c) for k, c in vec.items()})
    return LaurentX({k: RatQT(c) * scale for k, c in vec.items()})


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def act_letter(gen: str, exp: int, v: LaurentX, flavor: RepFlavor = STANDARD_FLAVOR) -> LaurentX:
    vec, scale = _split(v)
    return _join(_apply_letter(gen, exp, vec, flavor.param, flavor.param_inv), scale)


def act(a: HElement, v: LaurentX, flavor: RepFlavor = STANDARD_FLAVOR) -> LaurentX:
    """Left action of ``a`` on ``v``."""
    vec, scale = _split(v)
    out = LaurentX()
    for w, c in a.terms.items():
        res = act_word_laurent(w, vec, flavor)
        if res:
            out = out + _join(res, c * scale)
    return out


def right_act(v: LaurentX, a: HElement, flavor: RepFlavor = STANDARD_FLAVOR) -> LaurentX:
    """Right module structure twisted by phi: v . a = phi(a) v."""
    return act(phi(a), v, flavor)


def apply_T(v: LaurentX, flavor: RepFlavor = STANDARD_FLAVOR) -> LaurentX:
    return act_letter("T", 1, v, flavor)


def idempotent_project(v: LaurentX, flavor: RepFlavor = STANDARD_FLAVOR) -> LaurentX:
    """e = (T + 1/t) / (t + 1/t) applied to ``v``.

    The idempotent is an element of the algebra, so it is always built from
    t itself; only the operator T-hat depends on the flavor.
    """
    tv = apply_T(v, flavor)
    return (tv + v.scale(t.inverse())).scale((t + t.inverse()).inverse())


SIGN_POINT = -t * RatQT.monomial(-2, 0)  # X = -t q^-2, so x = -t q^-2 - q^2/t


def eval_sign(v: LaurentX) -> RatQT:
    """Evaluation on e P^-: divide by delta_t, evaluate the symmetric quotient."""
    quot = exact_divide_X(v, DELTA_T)
    if not quot.is_symmetric():
        raise ExactDivisionError("quotient by delta_t is not symmetric", quot)
    return eval_at(quot, SIGN_POINT)


def eval_standard(v: LaurentX) -> RatQT:
    """Evaluation at X = t."""
    return eval_at(v, t)


__all__ = [
    "RepFlavor", "STANDARD_FLAVOR", "SIGN_FLAVOR", "DELTA_T",
    "act_letter", "act", "right_act", "apply_T", "idempotent_project",
    "eval_at", "eval_sign", "eval_standard", "act_word_laurent",
]
