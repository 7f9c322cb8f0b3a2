"""Compositions, their action on words, the maps Psi_f, and lambda-graded identities.

A lambda-graded element is represented as ``dict[int, NCPoly]`` mapping the
power of lambda to its coefficient, truncated at an explicit degree bound.
"""
from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Sequence
from fractions import Fraction
from functools import lru_cache

from .ncpoly import NCPoly, Word, concat, concat_power, linear_map
from .products import ADDITIVE, DiamondProduct, block_shuffle, gen_quasi_shuffle, shuffle
from .series import FormalSeries, series_atanh, series_expm1, series_log1p, series_tanh

Composition = tuple[int, ...]
Graded = dict[int, NCPoly]

DEFAULT_DEGREE = 8


# -- compositions --------------------------------------------------------------

def compositions(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n, in lexicographic order."""
    if n < 1:
        raise ValueError("compositions are defined for n >= 1")
    out = []
    for cuts in itertools.product((False, True), repeat=n - 1):
        parts, run = [], 1
        for cut in cuts:
            if cut:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


def compositions_into(r: int, m: int) -> list[Composition]:
    """Compositions of r into exactly m parts (empty if m > r)."""
    if r < 1 or m < 1:
        raise ValueError("need r >= 1 and m >= 1")
    if m > r:
        return []
    return [
        tuple(b - a for a, b in zip((0,) + cuts, cuts + (r,)))
        for cuts in itertools.combinations(range(1, r), m - 1)
    ]


def compose_compositions(J: Sequence[int], I: Sequence[int]) -> Composition:
    """J o I: sum consecutive parts of I in groups sized by J."""
    if sum(J) != len(I):
        raise ValueError(f"J sums to {sum(J)} but I has {len(I)} parts")
    out, pos = [], 0
    for j in J:
        if j < 1:
            raise ValueError("composition parts must be positive")
        out.append(sum(I[pos:pos + j]))
        pos += j
    return tuple(out)


# -- brackets and the composition action -------------------------------------------

def _bracket_dict(w: Word, d: DiamondProduct) -> dict[int, Fraction]:
    if not w:
        raise ValueError("bracket of the empty word is undefined")
    acc: dict[int, Fraction] = {w[0]: Fraction(1)}
    for x in w[1:]:
        acc = d.combine(acc, {x: 1})
    return acc


def bracket(w: Word, d: DiamondProduct = ADDITIVE) -> NCPoly:
    return NCPoly.letters(_bracket_dict(tuple(w), d))


def _segments(w: Word, parts: Sequence[int]) -> Iterator[Word]:
    pos = 0
    for k in parts:
        yield w[pos:pos + k]
        pos += k


def composition_action(I: Sequence[int], w: Word, d: DiamondProduct = ADDITIVE) -> NCPoly:
    """I[w]: concatenated brackets of consecutive segments; zero unless len(w) == sum(I)."""
    w = tuple(w)
    if sum(I) != len(w):
        return NCPoly.zero()
    result = NCPoly.one()
    for seg in _segments(w, I):
        result = concat(result, bracket(seg, d))
    return result


# -- Psi_f ---------------------------------------------------------------------

def _coeff_tuple(f: FormalSeries, n: int) -> tuple[Fraction, ...]:
    if f.degree < n:
        raise ValueError(f"series truncated at degree {f.degree}, need coefficients up to {n}")
    return tuple(f[k] for k in range(n + 1))


@lru_cache(maxsize=None)
def _psi_word(coeffs: tuple[Fraction, ...], w: Word, d: DiamondProduct) -> dict[Word, Fraction]:
    # recursive segmenting: choose the first block, recurse on the rest
    if not w:
        return {(): Fraction(1)}
    out: dict[Word, Fraction] = {}
    for k in range(1, len(w) + 1):
        ck = coeffs[k]
        if not ck:
            continue
        head = _bracket_dict(w[:k], d)
        for tail, c in _psi_word(coeffs, w[k:], d).items():
            for x, h in head.items():
                key = (x,) + tail
                out[key] = out.get(key, 0) + ck * h * c
    return {k: v for k, v in out.items() if v}


def psi(f: FormalSeries, p: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    """Psi_f(w) = sum over compositions (i_1..i_l) of len(w) of c_{i_1}...c_{i_l} (i_1..i_l)[w]."""
    n = p.max_length()
    if n <= 0:
        return p
    coeffs = _coeff_tuple(f, n)
    return linear_map(p, lambda w: _psi_word(coeffs[: len(w) + 1], w, d))


def psi_direct(f: FormalSeries, p: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    """Same map as :func:`psi`, by enumerating every composition explicitly."""
    n = p.max_length()
    if n <= 0:
        return p
    coeffs = _coeff_tuple(f, n)

    def on_word(w: Word) -> NCPoly:
        if not w:
            return NCPoly.one()
        total = NCPoly.zero()
        for I in compositions(len(w)):
            weight = Fraction(1)
            for i in I:
                weight *= coeffs[i]
            if weight:
                total = total + weight * composition_action(I, w, d)
        return total

    return linear_map(p, on_word)


def psi_tanh(p: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    return psi(series_tanh(max(p.max_length(), 1)), p, d)


def psi_atanh(p: NCPoly, d: DiamondProduct = ADDITIVE) -> NCPoly:
    return psi(series_atanh(max(p.max_length(), 1)), p, d)


# -- lambda-graded algebra --------------------------------------------------------

def graded_clean(x: Graded) -> Graded:
    return {k: v for k, v in x.items() if v}


def graded_add(x: Graded, y: Graded) -> Graded:
    out = dict(x)
    for k, v in y.items():
        out[k] = out[k] + v if k in out else v
    return graded_clean(out)


def graded_scale(c, x: Graded) -> Graded:
    return graded_clean({k: c * v for k, v in x.items()})


def graded_mul(x: Graded, y: Graded, mul: Callable[[NCPoly, NCPoly], NCPoly], degree: int) -> Graded:
    out: Graded = {}
    for i, a in x.items():
        for j, b in y.items():
            if i + j <= degree:
                term = mul(a, b)
                out[i + j] = out[i + j] + term if i + j in out else term
    return graded_clean(out)


def graded_map(x: Graded, fn: Callable[[NCPoly], NCPoly]) -> Graded:
    return graded_clean({k: fn(v) for k, v in x.items()})


def graded_equal(x: Graded, y: Graded, degree: int) -> bool:
    zero = NCPoly.zero()
    return all(x.get(k, zero) == y.get(k, zero) for k in range(degree + 1))


def _diamond_mul(d: DiamondProduct) -> Callable[[NCPoly, NCPoly], NCPoly]:
    def mul(a: NCPoly, b: NCPoly) -> NCPoly:
        return NCPoly.letters(d.combine(a.as_letter_dict(), b.as_letter_dict()))
    return mul


def bullet_product(bullet: str, d: DiamondProduct = ADDITIVE) -> Callable[[NCPoly, NCPoly], NCPoly]:
    if bullet == "sh":
        return shuffle
    if bullet == "bsh":
        return block_shuffle if d is ADDITIVE else (lambda a, b: gen_quasi_shuffle(a, b, d))
    if bullet == "star":
        return lambda a, b: gen_quasi_shuffle(a, b, d)
    if bullet == "diamond":
        return _diamond_mul(d)
    if bullet == "concat":
        return concat
    raise ValueError(f"unknown product {bullet!r}; expected sh, bsh, star, diamond or concat")


def apply_series(f: FormalSeries, x: Graded, bullet: str, degree: int, d: DiamondProduct = ADDITIVE) -> Graded:
    """f_bullet(x) = sum_i c_i x^(bullet i) for a graded x without lambda^0 part."""
    if x.get(0):
        raise ValueError("argument must have no lambda^0 component")
    if f.degree < degree:
        raise ValueError(f"series known only to degree {f.degree}, need {degree}")
    if bullet == "diamond":
        for v in x.values():
            if not v.is_letter_combination():
                raise ValueError("the diamond product applies only to combinations of letters")
    mul = bullet_product(bullet, d)
    out: Graded = {}
    pw: Graded | None = None
    for i in range(1, degree + 1):
        pw = dict(x) if pw is None else graded_mul(pw, x, mul, degree)
        if not pw:
            break
        if f[i]:
            out = graded_add(out, graded_scale(f[i], pw))
    return out


def f_bullet(f: FormalSeries, z: NCPoly, bullet: str, degree: int, d: DiamondProduct = ADDITIVE) -> Graded:
    """f_bullet(lambda z), graded by the power of lambda."""
    return apply_series(f, {1: z} if z else {}, bullet, degree, d)


def exp_bullet(x: Graded, bullet: str, degree: int, d: DiamondProduct = ADDITIVE) -> Graded:
    return graded_add({0: NCPoly.one()}, apply_series(series_expm1(degree), x, bullet, degree, d))


def log_bullet(one_plus_x: Graded, bullet: str, degree: int, d: DiamondProduct = ADDITIVE) -> Graded:
    """log_bullet(1 + x); the argument must have lambda^0 part equal to 1."""
    if one_plus_x.get(0, NCPoly.zero()) != NCPoly.one():
        raise ValueError("log needs an argument with constant part 1")
    x = {k: v for k, v in one_plus_x.items() if k}
    return apply_series(series_log1p(degree), x, bullet, degree, d)


def geometric(z: NCPoly, degree: int) -> Graded:
    """1/(1 - lambda z) = sum_n lambda^n z^n with concatenation powers."""
    return graded_clean({n: concat_power(z, n) for n in range(degree + 1)})


def geometric_of(x: Graded, degree: int) -> Graded:
    """1/(1 - x) for a graded x without lambda^0 part (concatenation powers)."""
    out: Graded = {0: NCPoly.one()}
    pw: Graded = {0: NCPoly.one()}
    for _ in range(degree):
        pw = graded_mul(pw, x, concat, degree)
        if not pw:
            break
        out = graded_add(out, pw)
    return out


def psi_graded(f: FormalSeries, x: Graded, d: DiamondProduct = ADDITIVE) -> Graded:
    return graded_map(x, lambda v: psi(f, v, d))


# -- identity checks ----------------------------------------------------------------

def _letters(z: NCPoly) -> NCPoly:
    if not z.is_letter_combination():
        raise ValueError(f"{z} must be a combination of letters")
    return z


def geometric_identity_sides(f: FormalSeries, z: NCPoly, degree: int, d: DiamondProduct = ADDITIVE) -> tuple[Graded, Graded]:
    z = _letters(z)
    lhs = psi_graded(f, geometric(z, degree), d)
    rhs = geometric_of(f_bullet(f, z, "diamond", degree, d), degree)
    return lhs, rhs


def check_geometric_identity(f: FormalSeries, z: NCPoly, degree: int = DEFAULT_DEGREE, d: DiamondProduct = ADDITIVE) -> bool:
    """Psi_f(1/(1 - lambda z)) == 1/(1 - f_diamond(lambda z)) through lambda^degree."""
    lhs, rhs = geometric_identity_sides(f, z, degree, d)
    return graded_equal(lhs, rhs, degree)


def exp_tanh_sides(z: NCPoly, degree: int, d: DiamondProduct = ADDITIVE) -> tuple[Graded, Graded]:
    z = _letters(z)
    lhs = exp_bullet({1: z} if z else {}, "star", degree, d)
    rhs = psi_graded(series_tanh(degree), geometric(z, degree), d)
    return lhs, rhs


def check_exp_tanh(z: NCPoly, degree: int = DEFAULT_DEGREE, d: DiamondProduct = ADDITIVE) -> bool:
    """exp_star(lambda z) == Psi_tanh(1/(1 - lambda z))."""
    lhs, rhs = exp_tanh_sides(z, degree, d)
    return graded_equal(lhs, rhs, degree)


def expgeo_sides(z: NCPoly, degree: int, d: DiamondProduct = ADDITIVE) -> tuple[Graded, Graded]:
    z = _letters(z)
    inner = f_bullet(series_atanh(degree), z, "diamond", degree, d)
    lhs = exp_bullet(inner, "star", degree, d)
    rhs = geometric(z, degree)
    return lhs, rhs


def check_expgeo(z: NCPoly, degree: int = DEFAULT_DEGREE, d: DiamondProduct = ADDITIVE) -> bool:
    """exp_star(atanh_diamond(lambda z)) == 1/(1 - lambda z)."""
    lhs, rhs = expgeo_sides(z, degree, d)
    return graded_equal(lhs, rhs, degree)


def check_log_exp(z: NCPoly, bullet: str, degree: int = DEFAULT_DEGREE, d: DiamondProduct = ADDITIVE) -> bool:
    """log_bullet(exp_bullet(lambda z)) == lambda z."""
    e = exp_bullet({1: z} if z else {}, bullet, degree, d)
    back = log_bullet(e, bullet, degree, d)
    return graded_equal(back, {1: z} if z else {}, degree)


IDENTITY_CHECKS = {
    "geometric": lambda z, degree: check_geometric_identity(series_tanh(degree), z, degree),
    "exptanh": check_exp_tanh,
    "expgeo": check_expgeo,
}

