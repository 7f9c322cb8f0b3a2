"""Lyndon words, Chen-Fox-Lyndon factorisation, and Lyndon-basis decompositions.

Words are ordered lexicographically with z1 < z2 < ..., i.e. as tuples.
"""
from __future__ import annotations

from collections.abc import Iterator
from fractions import Fraction
from math import factorial

from .ncpoly import NCPoly, Word
from .products import ADDITIVE, DiamondProduct, gen_quasi_shuffle, shuffle
from .series import FormalSeries
from .series_iso import compositions


def is_lyndon(w: Word) -> bool:
    """Nonempty and strictly smaller than each of its proper suffixes."""
    w = tuple(w)
    return bool(w) and all(w < w[i:] for i in range(1, len(w)))


def _duval_sequence(max_letter: int, n: int) -> Iterator[Word]:
    # Fredricksen-Kessler-Maiorana successor: all Lyndon words of length <= n
    w = [1]
    while w:
        yield tuple(w)
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == max_letter:
            w.pop()
        if w:
            w[-1] += 1


def lyndon_words(max_letter: int, length: int) -> list[Word]:
    """All Lyndon words of exactly ``length`` letters over z_1..z_max_letter, sorted."""
    if max_letter < 1 or length < 1:
        raise ValueError("need max_letter >= 1 and length >= 1")
    return [w for w in _duval_sequence(max_letter, length) if len(w) == length]


def cfl_factorize(w: Word) -> list[Word]:
    """Duval's algorithm: the unique non-increasing factorisation into Lyndon words."""
    w = tuple(w)
    if not w:
        raise ValueError("the empty word has no Lyndon factorisation")
    out = []
    n, k = len(w), 0
    while k < n:
        i, j = k, k + 1
        while j < n and w[i] <= w[j]:
            i = k if w[i] < w[j] else i + 1
            j += 1
        while k <= i:
            out.append(w[k:k + j - i])
            k += j - i
    return out


class LyndonBasisExpr:
    """Rational combination of products of Lyndon words.

    Each key is a sorted tuple of Lyndon words (a multiset, the empty tuple
    being the unit); ``product`` names the product it denotes, ``"sh"`` or
    ``"star"``.
    """

    def __init__(self, terms: dict[tuple[Word, ...], Fraction], product: str, diamond: DiamondProduct = ADDITIVE):
        if product not in ("sh", "star"):
            raise ValueError("product must be 'sh' or 'star'")
        for key in terms:
            for word in key:
                if not is_lyndon(word):
                    raise ValueError(f"{word} is not a Lyndon word")
        self.terms = {tuple(sorted(k)): Fraction(v) for k, v in terms.items() if v}
        self.product = product
        self.diamond = diamond

    def _mul(self, a: NCPoly, b: NCPoly) -> NCPoly:
        if self.product == "sh":
            return shuffle(a, b)
        return gen_quasi_shuffle(a, b, self.diamond)

    def expand(self) -> NCPoly:
        total: dict[Word, Fraction] = {}
        for key, c in self.terms.items():
            prod = NCPoly.one()
            for word in key:
                prod = self._mul(prod, NCPoly({word: 1}))
            for w, v in prod.items():
                total[w] = total.get(w, 0) + c * v
        return NCPoly.from_dict(total)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LyndonBasisExpr):
            return NotImplemented
        return self.product == other.product and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        op = " sh " if self.product == "sh" else " * "
        parts = []
        for key, c in sorted(self.terms.items(), key=lambda t: (-len(t[0]), t[0])):
            body = op.join("".join(f"z{i}" for i in w) for w in key) if key else "1"
            parts.append(f"{c}*({body})" if c != 1 else f"({body})")
        return " + ".join(parts)

    __repr__ = __str__


def _add(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _multiplicity_factor(factors: list[Word]) -> int:
    out, run = 1, 1
    for a, b in zip(factors, factors[1:]):
        if a == b:
            run += 1
        else:
            out *= factorial(run)
            run = 1
    return out * factorial(run)


def _shuffle_of(factors) -> NCPoly:
    prod = NCPoly.one()
    for f in factors:
        prod = shuffle(prod, NCPoly({f: 1}))
    return prod


def _decompose_shuffle_terms(p: NCPoly) -> dict[tuple[Word, ...], Fraction]:
    # the lexicographically largest word of l_1 sh ... sh l_k (CFL factors) is
    # their concatenation, with coefficient the product of multiplicity factorials
    rest = dict(p.terms)
    out: dict[tuple[Word, ...], Fraction] = {}
    while rest:
        top = max(rest, key=lambda w: (len(w), w))
        c = rest[top]
        if not top:
            _add(out, (), c)
            del rest[top]
            continue
        factors = cfl_factorize(top)
        k = c / _multiplicity_factor(factors)
        _add(out, tuple(sorted(factors)), k)
        for w, v in _shuffle_of(factors).items():
            _add(rest, w, -k * v)
        assert top not in rest
    return out


def decompose_shuffle(p: NCPoly) -> LyndonBasisExpr:
    """Write p as a polynomial in Lyndon words under the shuffle product."""
    return LyndonBasisExpr(_decompose_shuffle_terms(p), "sh")


def decompose_star(p: NCPoly, d: DiamondProduct = ADDITIVE) -> LyndonBasisExpr:
    """Write p as a polynomial in Lyndon words under the generalised quasi-shuffle.

    The top-length part is decomposed for the shuffle product; since the two
    products agree on top length, subtracting the star-expansion of that
    decomposition leaves only shorter words, and we repeat.
    """
    out: dict[tuple[Word, ...], Fraction] = {}
    rest = p
    while rest:
        top_len = rest.max_length()
        terms = _decompose_shuffle_terms(rest.length_part(top_len))
        piece = LyndonBasisExpr(terms, "star", d)
        rest = rest - piece.expand()
        if rest.max_length() >= top_len:
            raise RuntimeError("star product failed to agree with shuffle on top length")
        for key, c in terms.items():
            _add(out, key, c)
    return LyndonBasisExpr(out, "star", d)


# -- counting ------------------------------------------------------------------

def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def poincare_series(grading: str, n: int, letters: int | None = None) -> FormalSeries:
    """Z(x) truncated at x^n: 1/(1 - M x) by length, (1 - x)/(1 - 2x) by weight."""
    if grading == "length":
        if letters is None or letters < 1:
            raise ValueError("length grading needs the number of letters")
        return FormalSeries({0: 1, 1: -letters}, n).reciprocal()
    if grading == "weight":
        return FormalSeries({0: 1, 1: -1}, n) / FormalSeries({0: 1, 1: -2}, n)
    raise ValueError(f"unknown grading {grading!r}; expected 'length' or 'weight'")


def log_derivative_coefficients(z: FormalSeries) -> list[Fraction]:
    """c_1..c_n with x d/dx log Z(x) = sum c_k x^k."""
    n = z.degree
    ratio = z.derivative() / z.truncate(max(n - 1, 0))
    return [Fraction(0)] + [ratio[k - 1] for k in range(1, n + 1)]


def lyndon_count(grading: str, n: int, letters: int | None = None) -> int:
    """Number of Lyndon words of size n via Moebius inversion of the Poincare series."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = log_derivative_coefficients(poincare_series(grading, n, letters))
    total = sum(mobius(n // d) * c[d] for d in divisors(n)) / n
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral Lyndon count {total}")
    return int(total)


def lyndon_words_by_weight(n: int) -> list[Word]:
    """Lyndon words whose letter indices sum to n (no bound on the alphabet needed)."""
    return sorted(w for w in compositions(n) if is_lyndon(w))
