"""Words in the generators X, Y, T and the SL2(Z) substitutions acting on them.

No relations are imposed here: an :class:`HElement` is an element of the free
algebra.  The relations only become visible through the operators in
:mod:`dahaknots.polyrep`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exactalg import RATQT_ONE, RatQT, q

GENERATORS = ("X", "Y", "T")

# a word is a tuple of (generator, nonzero exponent), no two neighbours share a generator
Word = tuple


def _append(word: list, gen: str, exp: int):
    if word and word[-1][0] == gen:
        e = word[-1][1] + exp
        word.pop()
        if e:
            word.append((gen, e))
    elif exp:
        word.append((gen, exp))


def concat(a: Word, b: Word) -> Word:
    out = list(a)
    for g, e in b:
        _append(out, g, e)
    return tuple(out)


def word_text(w: Word) -> str:
    if not w:
        return "1"
    return ".".join(g if e == 1 else f"{g}^{e}" for g, e in w)


class HElement:
    """Finite linear combination of words with RatQT coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        for w, c in (terms or {}).items():
            if not isinstance(c, RatQT):
                c = RatQT(c)
            w = concat((), tuple(w))
            if w in self._terms:
                c = self._terms[w] + c
            if c.is_zero():
                self._terms.pop(w, None)
            else:
                self._terms[w] = c

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def letter(cls, gen: str, exp: int = 1, coeff=1):
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        return cls({((gen, exp),) if exp else (): coeff})

    @classmethod
    def scalar(cls, c):
        return cls({(): c})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, HElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        r = dict(self._terms)
        for w, c in other._terms.items():
            v = r[w] + c if w in r else c
            if v.is_zero():
                r.pop(w, None)
            else:
                r[w] = v
        return HElement._raw(r)

    def __neg__(self):
        return HElement._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, RatQT):
            c = RatQT(c)
        if c.is_zero():
            return HElement()
        return HElement._raw({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HElement):
            return self.scale(other)
        return hmul(self, other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n):
        r = ONE
        for _ in range(n):
            r = r * self
        return r

    def max_word_length(self):
        return max((sum(abs(e) for _, e in w) for w in self._terms), default=0)

    def to_text(self):
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            if c == RATQT_ONE:
                parts.append(word_text(w))
            else:
                parts.append(f"({c.to_text()})*{word_text(w)}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HElement({self.to_text()})"


def hmul(a: HElement, b: HElement) -> HElement:
    r = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            w = concat(wa, wb)
            c = ca * cb
            if w in r:
                c = r[w] + c
            if c.is_zero():
                r.pop(w, None)
            else:
                r[w] = c
    return HElement._raw(r)


ONE = HElement.scalar(1)


def phi(a: HElement) -> HElement:
    """Anti-automorphism X -> Y^-1, Y -> X^-1, T -> T."""
    swap = {"X": ("Y", -1), "Y": ("X", -1), "T": ("T", 1)}
    r = {}
    for w, c in a._terms.items():
        out = []
        for g, e in reversed(w):
            g2, sgn = swap[g]
            _append(out, g2, sgn * e)
        r[tuple(out)] = c
    return HElement._raw(r)


# ---------------------------------------------------------------------------
# SL2(Z) action
# ---------------------------------------------------------------------------

TAU_MATRICES = {
    "tau+": ((1, 1), (0, 1)),
    "tau-": ((1, 0), (1, 1)),
    "tau+^-1": ((1, -1), (0, 1)),
    "tau-^-1": ((1, 0), (-1, 1)),
}

INVERSE = {"tau+": "tau+^-1", "tau+^-1": "tau+", "tau-": "tau-^-1", "tau-^-1": "tau-"}

# image of each positive letter as (q-exponent, word); generators not listed are fixed
_IMAGES = {
    "tau+": {"Y": (-1, (("X", 1), ("Y", 1)))},
    "tau-": {"X": (1, (("Y", 1), ("X", 1)))},
    "tau+^-1": {"Y": (1, (("X", -1), ("Y", 1)))},
    "tau-^-1": {"X": (-1, (("Y", -1), ("X", 1)))},
}


def _letter_image(g: str, gen: str, exp: int):
    """(q-exponent, word) image of ``gen^exp`` under the substitution ``g``."""
    img = _IMAGES[g].get(gen)
    if img is None:
        return 0, ((gen, exp),)
    qe, w = img
    if exp < 0:
        # inverse letter: reversed inverted word, inverted scalar
        qe, w = -qe, tuple((h, -e) for h, e in reversed(w))
    k = abs(exp)
    out = []
    for _ in range(k):
        for h, e in w:
            _append(out, h, e)
    return qe * k, tuple(out)


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


_IDENTITY = ((1, 0), (0, 1))


@dataclass(frozen=True)
class TauWord:
    """Word in the generators tau+, tau-, and their inverses, with cached matrix."""

    letters: tuple = ()
    matrix: tuple = field(default=_IDENTITY, compare=False)

    def __post_init__(self):
        m = _IDENTITY
        for g in self.letters:
            if g not in TAU_MATRICES:
                raise ValueError(f"unknown tau generator {g!r}")
            m = _mat_mul(m, TAU_MATRICES[g])
        object.__setattr__(self, "matrix", m)

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "TauWord") -> "TauWord":
        return TauWord(self.letters + other.letters)

    def inverse(self) -> "TauWord":
        return TauWord(tuple(INVERSE[g] for g in reversed(self.letters)))

    def column(self):
        """Image of (0, 1)^T."""
        return (self.matrix[0][1], self.matrix[1][1])

    def determinant(self):
        (a, b), (c, d) = self.matrix
        return a * d - b * c


_S_WORD = ("tau+", "tau-^-1", "tau+")  # matrix [[0,1],[-1,0]]


def decompose_gamma(r: int, s: int) -> TauWord:
    """A tau-word whose matrix sends (0,1)^T to (r,s)^T.

    Euclid on (r, s): each step left-multiplies by an inverse generator,
    recording the generator, until (0, 1) is reached.
    """
    if gcd(r, s) != 1:
        raise ValueError(f"gamma_{{{r},{s}}} needs coprime entries, gcd is {gcd(r, s)}")
    out = []
    while (r, s) != (0, 1):
        if r == 0:
            # (0, -1): -I = S^2
            out.extend(_S_WORD * 2)
            break
        if s != 0 and abs(r) >= abs(s):
            if (r > 0) == (s > 0):
                r, out_g = r - s, "tau+"
            else:
                r, out_g = r + s, "tau+^-1"
        else:
            if s == 0 or (r > 0) == (s > 0):
                s, out_g = s - r, "tau-"
            else:
                s, out_g = s + r, "tau-^-1"
        out.append(out_g)
    return TauWord(tuple(out))


def tau_apply(a: HElement, g: str) -> HElement:
    """Apply one substitution automorphism letterwise."""
    if g not in _IMAGES:
        raise ValueError(f"unknown tau generator {g!r}")
    r = {}
    for w, c in a._terms.items():
        qe_total = 0
        out = []
        for gen, e in w:
            qe, img = _letter_image(g, gen, e)
            qe_total += qe
            for h, f in img:
                _append(out, h, f)
        w2 = tuple(out)
        c2 = c * q ** qe_total if qe_total else c
        if w2 in r:
            c2 = r[w2] + c2
        if c2.is_zero():
            r.pop(w2, None)
        else:
            r[w2] = c2
    return HElement._raw(r)


def tau_word_apply(a: HElement, word: TauWord) -> HElement:
    """Apply ``word`` as the composite automorphism g_1 o g_2 o ... o g_k."""
    for g in reversed(word.letters):
        a = tau_apply(a, g)
    return a


def decompose_matrix(m) -> TauWord:
    """A tau-word for an arbitrary SL2(Z) matrix.

    Independent of :func:`decompose_gamma`: the first column is reduced to
    (1, 0) and what is left is a power of tau+.
    """
    (a, b), (c, d) = m
    if a * d - b * c != 1:
        raise ValueError("matrix is not in SL2(Z)")
    out = []
    cur = ((a, b), (c, d))
    while cur[1][0] != 0 or cur[0][0] != 1:
        (a, b), (c, d) = cur
        if c == 0:
            # a = -1: multiply by -I = S^2
            out.extend(_S_WORD * 2)
            cur = ((-a, -b), (-c, -d))
            continue
        if a != 0 and abs(c) >= abs(a):
            g = "tau-" if (a > 0) == (c > 0) else "tau-^-1"
        else:
            g = "tau+" if (a > 0) == (c > 0) else "tau+^-1"
        out.append(g)
        cur = _mat_mul(TAU_MATRICES[INVERSE[g]], cur)
    b = cur[0][1]
    out.extend(["tau+" if b > 0 else "tau+^-1"] * abs(b))
    word = TauWord(tuple(out))
    if word.matrix != tuple(map(tuple, m)):
        raise AssertionError("matrix decomposition failed")
    return word


def gamma_word(r: int, s: int, variant: int = 0) -> TauWord:
    """Word for gamma_{r,s}; ``variant`` != 0 picks gamma * (tau-)^variant, spelled independently."""
    word = decompose_gamma(r, s)
    if variant:
        m = word.matrix
        for _ in range(abs(variant)):
            m = _mat_mul(m, TAU_MATRICES["tau-" if variant > 0 else "tau-^-1"])
        word = decompose_matrix(m)
    return word


def gamma_apply(r: int, s: int, a: HElement, variant: int = 0) -> HElement:
    """gamma_{r,s}(a) for the word chosen by :func:`gamma_word`."""
    return tau_word_apply(a, gamma_word(r, s, variant))


# ---------------------------------------------------------------------------
# named spherical generators
# ---------------------------------------------------------------------------

X_WORD = HElement({(("X", 1),): 1, (("X", -1),): 1})
Y_WORD = HElement({(("Y", 1),): 1, (("Y", -1),): 1})
Z_WORD = HElement({
    (("X", 1), ("Y", 1), ("T", -2)): q ** -1,
    (("X", -1), ("Y", -1)): q ** -1,
})


def e_word(r: int, s: int) -> HElement:
    """e_{r,s} = q^{-rs} X^r Y^s."""
    w = tuple(x for x in (("X", r), ("Y", s)) if x[1])
    return HElement({w: q ** (-r * s)})


def y_power_sum(k: int) -> HElement:
    """Y^k + Y^-k (and 1 for k = 0)."""
    if k == 0:
        return ONE
    return HElement({(("Y", k),): 1, (("Y", -k),): 1})
