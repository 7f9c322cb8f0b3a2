"""Shuffle, quasi-shuffle and generalised quasi-shuffle products on NCPoly.

All three are defined by recursions on the first letters of the two words.
Word-level results are memoised per (u, v, diamond); the polynomial-level
functions extend them bilinearly.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Mapping
from fractions import Fraction
from functools import lru_cache

from .ncpoly import NCPoly, Word

LetterCombo = dict[int, Fraction]


class DiamondProduct:
    """Commutative, associative bilinear product on the span of the letters.

    ``rule(a, b)`` returns the product of z_a and z_b as a mapping
    ``{letter index: coefficient}``.  Instances hash by identity so they can
    key the memo tables.
    """

    def __init__(self, rule: Callable[[int, int], Mapping[int, Fraction | int]], name: str = "custom"):
        self._rule = rule
        self.name = name

    def __repr__(self) -> str:
        return f"DiamondProduct({self.name!r})"

    def letters(self, a: int, b: int) -> Mapping[int, Fraction | int]:
        return self._rule(a, b)

    def combine(self, p: Mapping[int, Fraction | int], q: Mapping[int, Fraction | int]) -> LetterCombo:
        """Bilinear extension to letter combinations."""
        out: dict[int, Fraction] = {}
        for a, x in p.items():
            for b, y in q.items():
                for c, z in self._rule(a, b).items():
                    out[c] = out.get(c, 0) + x * y * z
        return {c: v for c, v in out.items() if v}

    def power(self, p: Mapping[int, Fraction | int], n: int) -> LetterCombo:
        if n < 1:
            raise ValueError("diamond powers start at 1 (there is no diamond unit in general)")
        result = dict(p)
        for _ in range(n - 1):
            result = self.combine(result, p)
        return {c: Fraction(v) for c, v in result.items() if v}

    def check(self, bound: int = 6) -> None:
        """Raise ValueError unless commutative and associative on letters z_1..z_bound."""
        idx = range(1, bound + 1)
        for a, b in itertools.product(idx, repeat=2):
            if _clean(self._rule(a, b)) != _clean(self._rule(b, a)):
                raise ValueError(f"{self.name} is not commutative on (z{a}, z{b})")
        for a, b, c in itertools.product(idx, repeat=3):
            left = self.combine(self.combine({a: 1}, {b: 1}), {c: 1})
            right = self.combine({a: 1}, self.combine({b: 1}, {c: 1}))
            if _clean(left) != _clean(right):
                raise ValueError(f"{self.name} is not associative on (z{a}, z{b}, z{c})")


def _clean(m: Mapping) -> dict:
    return {k: Fraction(v) for k, v in m.items() if v}


ADDITIVE = DiamondProduct(lambda a, b: {a + b: 1}, "additive")
# with the zero diamond both quasi-shuffles collapse to the shuffle product
ZERO = DiamondProduct(lambda a, b: {}, "zero")

DIAMONDS = {"additive": ADDITIVE, "zero": ZERO}


def _add_into(out: dict, word: Word, c) -> None:
    s = out.get(word, 0) + c
    if s:
        out[word] = s
    else:
        out.pop(word, None)


def _bilinear(word_product, p: NCPoly, q: NCPoly) -> NCPoly:
    out: dict[Word, Fraction] = {}
    for u, a in p.items():
        for v, b in q.items():
            ab = a * b
            for w, c in word_product(u, v).items():
                _add_into(out, w, ab * c)
    return NCPoly.from_dict(out)


# -- shuffle -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _shuffle_words(u: Word, v: Word) -> dict[Word, int]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: dict[Word, int] = {}
    a, b = u[0], v[0]
    for w, c in _shuffle_words(u[1:], v).items():
        _add_into(out, (a,) + w, c)
    for w, c in _shuffle_words(u, v[1:]).items():
        _add_into(out, (b,) + w, c)
    return out


def shuffle(u: NCPoly, v: NCPoly) -> NCPoly:
    return _bilinear(_shuffle_words, u, v)


# -- Hoffman quasi-shuffle ---------------------------------------------------

@lru_cache(maxsize=None)
def _hoffman_words(u: Word, v: Word, d: DiamondProduct) -> dict[Word, Fraction]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: dict[Word, Fraction] = {}
    a, b = u[0], v[0]
    for w, c in _hoffman_words(u[1:], v, d).items():
        _add_into(out, (a,) + w, c)
    for w, c in _hoffman_words(u, v[1:], d).items():
        _add_into(out, (b,) + w, c)
    merged = d.letters(a, b)
    if merged:
        for w, c in _hoffman_words(u[1:], v[1:], d).items():
            for x, k in merged.items():
                _add_into(out, (x,) + w, c * k)
    return out


def hoffman_quasi_shuffle(u: NCPoly, v: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    return _bilinear(lambda x, y: _hoffman_words(x, y, d), u, v)


# -- letter action L_a ---------------------------------------------------------

def _letter_action_into(out: dict, combo: Mapping[int, Fraction | int], terms, d: DiamondProduct, sign=1) -> None:
    # replaces the leading letter x of each word by combo <> x; the empty word is killed
    for w, c in terms:
        if not w:
            continue
        head = d.combine(combo, {w[0]: 1})
        tail = w[1:]
        for x, k in head.items():
            _add_into(out, (x,) + tail, sign * c * k)


def L(a: int | NCPoly | Mapping[int, Fraction | int], w: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    """Apply L_a: L_a(x w) = (a <> x) w and L_a(1) = 0, linear in ``a`` and ``w``."""
    if isinstance(a, int):
        combo = {a: 1}
    elif isinstance(a, NCPoly):
        combo = a.as_letter_dict()
    else:
        combo = dict(a)
    out: dict[Word, Fraction] = {}
    _letter_action_into(out, combo, w.items(), d)
    return NCPoly.from_dict(out)


letter_action = L


# -- generalised quasi-shuffle ------------------------------------------------

@lru_cache(maxsize=None)
def _star_words(u: Word, v: Word, d: DiamondProduct) -> dict[Word, Fraction]:
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    out: dict[Word, Fraction] = {}
    a, b = u[0], v[0]
    for w, c in _star_words(u[1:], v, d).items():
        _add_into(out, (a,) + w, c)
    for w, c in _star_words(u, v[1:], d).items():
        _add_into(out, (b,) + w, c)
    merged = d.letters(a, b)
    if merged:
        _letter_action_into(out, merged, _star_words(u[1:], v[1:], d).items(), d, sign=-1)
    return out


def gen_quasi_shuffle(u: NCPoly, v: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    """u * v with  au * bv = a(u * bv) + b(au * v) - L_{a<>b}(u * v)."""
    return _bilinear(lambda x, y: _star_words(x, y, d), u, v)


star = gen_quasi_shuffle


def block_shuffle(u: NCPoly, v: NCPoly) -> NCPoly:
    return _bilinear(lambda x, y: _star_words(x, y, ADDITIVE), u, v)


PRODUCTS: dict[str, Callable[..., NCPoly]] = {
    "sh": lambda u, v, d=ADDITIVE: shuffle(u, v),
    "qsh": hoffman_quasi_shuffle,
    "bsh": lambda u, v, d=ADDITIVE: block_shuffle(u, v),
    "star": gen_quasi_shuffle,
}


def product(kind: str, u: NCPoly, v: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    try:
        fn = PRODUCTS[kind]
    except KeyError:
        raise ValueError(f"unknown product kind {kind!r}; expected one of {sorted(PRODUCTS)}") from None
    return fn(u, v, d)


def power(p: NCPoly, n: int, mul: Callable[[NCPoly, NCPoly], NCPoly]) -> NCPoly:
    result = NCPoly.one()
    for _ in range(n):
        result = mul(result, p)
    return result


def clear_caches() -> None:
    _shuffle_words.cache_clear()
    _hoffman_words.cache_clear()
    _star_words.cache_clear()
