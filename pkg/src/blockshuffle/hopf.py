"""Coproducts, counit and antipode on words, and degree-bounded Hopf checks."""
from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .ncpoly import NCPoly, Word
from .products import ADDITIVE, DiamondProduct, gen_quasi_shuffle
from .series_iso import compositions, compositions_into, psi_atanh, psi_tanh

Pair = tuple[Word, Word]


class TensorPoly:
    """Rational combination of pairs of words, u (x) v."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Pair, Fraction | int] | None = None):
        clean: dict[Pair, Fraction] = {}
        for (u, v), c in (terms or {}).items():
            key = (tuple(u), tuple(v))
            s = clean.get(key, 0) + Fraction(c)
            if s:
                clean[key] = s
            else:
                clean.pop(key, None)
        self._terms = clean

    @classmethod
    def tensor(cls, p: NCPoly, q: NCPoly) -> TensorPoly:
        return cls({(u, v): a * b for u, a in p.items() for v, b in q.items()})

    @property
    def terms(self) -> Mapping[Pair, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def __getitem__(self, key: Pair) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: TensorPoly) -> TensorPoly:
        out = dict(self._terms)
        for k, c in other.items():
            out[k] = out.get(k, 0) + c
        return TensorPoly(out)

    def __neg__(self) -> TensorPoly:
        return TensorPoly({k: -c for k, c in self.items()})

    def __sub__(self, other: TensorPoly) -> TensorPoly:
        return self + (-other)

    def __mul__(self, c) -> TensorPoly:
        return TensorPoly({k: c * v for k, v in self.items()})

    __rmul__ = __mul__

    def swap(self) -> TensorPoly:
        return TensorPoly({(v, u): c for (u, v), c in self.items()})

    def concat(self, other: TensorPoly) -> TensorPoly:
        """Componentwise concatenation (u1 (x) v1)(u2 (x) v2) = u1u2 (x) v1v2."""
        out: dict[Pair, Fraction] = {}
        for (u1, v1), a in self.items():
            for (u2, v2), b in other.items():
                key = (u1 + u2, v1 + v2)
                out[key] = out.get(key, 0) + a * b
        return TensorPoly(out)

    def bidegree(self, r: int, s: int) -> TensorPoly:
        return TensorPoly({(u, v): c for (u, v), c in self.items() if len(u) == r and len(v) == s})

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(len(u), len(v)) for u, v in self._terms}

    def map_legs(self, left: Callable[[NCPoly], NCPoly], right: Callable[[NCPoly], NCPoly]) -> TensorPoly:
        out = TensorPoly()
        for (u, v), c in self.items():
            out = out + c * TensorPoly.tensor(left(NCPoly({u: 1})), right(NCPoly({v: 1})))
        return out

    def pair_with(self, left: NCPoly, right: NCPoly) -> Fraction:
        return sum((c * left[u] * right[v] for (u, v), c in self.items()), Fraction(0))

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        def w(x):
            return " ".join(f"z{i}" for i in x) or "1"

        return " + ".join(f"{c}*[{w(u)} (x) {w(v)}]" for (u, v), c in sorted(self.items()))

    __repr__ = __str__


def _linear_tensor(p: NCPoly, on_word: Callable[[Word], Mapping[Pair, Fraction]]) -> TensorPoly:
    out: dict[Pair, Fraction] = {}
    for w, c in p.items():
        for key, v in on_word(w).items():
            out[key] = out.get(key, 0) + c * v
    return TensorPoly(out)


# -- deconcatenation Hopf structure --------------------------------------------------

def delta_decon(p: NCPoly) -> TensorPoly:
    return _linear_tensor(p, lambda w: {(w[:k], w[k:]): 1 for k in range(len(w) + 1)})


def counit(p: NCPoly) -> Fraction:
    return p[()]


def antipode(p: NCPoly) -> NCPoly:
    """S(z_i1 ... z_ir) = (-1)^r z_ir ... z_i1."""
    return NCPoly.from_dict({w[::-1]: (-1) ** len(w) * c for w, c in p.items()})


def tensor_star(x: TensorPoly, y: TensorPoly, d: DiamondProduct = ADDITIVE) -> TensorPoly:
    """(u1 (x) v1)(u2 (x) v2) -> (u1 * u2) (x) (v1 * v2)."""
    out = TensorPoly()
    for (u1, v1), a in x.items():
        for (u2, v2), b in y.items():
            left = gen_quasi_shuffle(NCPoly({u1: 1}), NCPoly({u2: 1}), d)
            right = gen_quasi_shuffle(NCPoly({v1: 1}), NCPoly({v2: 1}), d)
            out = out + (a * b) * TensorPoly.tensor(left, right)
    return out


def check_delta_star_homomorphism(u: Word, v: Word, d: DiamondProduct = ADDITIVE) -> bool:
    pu, pv = NCPoly({tuple(u): 1}), NCPoly({tuple(v): 1})
    return delta_decon(gen_quasi_shuffle(pu, pv, d)) == tensor_star(delta_decon(pu), delta_decon(pv), d)


def antipode_convolution(w: Word, d: DiamondProduct = ADDITIVE) -> tuple[NCPoly, NCPoly]:
    """Both sides sum_k S(w[:k]) * w[k:] and sum_k w[:k] * S(w[k:])."""
    w = tuple(w)
    left = NCPoly.zero()
    right = NCPoly.zero()
    for k in range(len(w) + 1):
        pre, suf = NCPoly({w[:k]: 1}), NCPoly({w[k:]: 1})
        left = left + gen_quasi_shuffle(antipode(pre), suf, d)
        right = right + gen_quasi_shuffle(pre, antipode(suf), d)
    return left, right


def check_antipode(w: Word, d: DiamondProduct = ADDITIVE) -> bool:
    """S * id = id * S = counit, evaluated on the word w."""
    left, right = antipode_convolution(w, d)
    expected = NCPoly.one() if not w else NCPoly.zero()
    return left == expected and right == expected


def check_psi_hopf_compat(w: Word, d: DiamondProduct = ADDITIVE) -> bool:
    """Delta_decon(Psi_tanh(w)) == (Psi_tanh (x) Psi_tanh)(Delta_decon(w))."""
    p = NCPoly({tuple(w): 1})
    lhs = delta_decon(psi_tanh(p, d))
    rhs = delta_decon(p).map_legs(lambda x: psi_tanh(x, d), lambda x: psi_tanh(x, d))
    return lhs == rhs


# -- the coproduct dual to the block shuffle ---------------------------------------

def _require_additive(d: DiamondProduct) -> None:
    if d is not ADDITIVE:
        raise ValueError("letter factorisations are only enumerable for the additive diamond")


@lru_cache(maxsize=None)
def _delta_bl_letter(n: int) -> dict[Pair, Fraction]:
    out: dict[Pair, Fraction] = {}
    for k in range(0, (n - 1) // 2 + 1):
        sign = (-1) ** k
        for parts in compositions_into(n, 2 * k + 1):
            left, right = parts[:k], parts[k:]
            for key in ((left, right), (right, left)):
                out[key] = out.get(key, 0) + sign
    return {k: Fraction(v) for k, v in out.items() if v}


def delta_bl(p: NCPoly, d: DiamondProduct = ADDITIVE) -> TensorPoly:
    """Letter coproduct sum_k (-1)^k [z_i1..z_ik (x) z_ik+1..z_i2k+1 + swap],
    over factorisations of the letter into 2k+1 letters, extended to words
    as a morphism for concatenation."""
    _require_additive(d)

    def on_word(w: Word) -> Mapping[Pair, Fraction]:
        acc = TensorPoly({((), ()): 1})
        for letter in w:
            acc = acc.concat(TensorPoly(_delta_bl_letter(letter)))
        return acc.terms

    return _linear_tensor(p, on_word)


def phi(letter: int, d: DiamondProduct = ADDITIVE) -> NCPoly:
    """sum_k 1/(2k+1) * (sum of words z_a1..z_a2k+1 whose letters multiply to z_letter)."""
    _require_additive(d)
    out: dict[Word, Fraction] = {}
    for m in range(1, letter + 1, 2):
        for parts in compositions_into(letter, m):
            out[parts] = Fraction(1, m)
    return NCPoly(out)


def phi_defect(letter: int, d: DiamondProduct = ADDITIVE) -> TensorPoly:
    """Delta_bl(Phi(z)) - Phi(z) (x) 1 - 1 (x) Phi(z); zero iff Phi(z) is primitive."""
    f = phi(letter, d)
    one = NCPoly.one()
    return delta_bl(f, d) - TensorPoly.tensor(f, one) - TensorPoly.tensor(one, f)


def check_phi_primitive(letter: int, rs_bound: int | None = None, d: DiamondProduct = ADDITIVE) -> bool:
    """All components w_{r,s} with 0 < r <= s <= rs_bound of the defect vanish.

    With ``rs_bound=None`` every bidegree is checked.
    """
    defect = phi_defect(letter, d)
    if rs_bound is None:
        return not defect
    return all(
        not defect.bidegree(r, s)
        for r in range(1, rs_bound + 1)
        for s in range(r, rs_bound + 1)
    )


def check_phi_dual(letter: int, max_length: int, d: DiamondProduct = ADDITIVE) -> bool:
    """<Phi(z), v> == <z, Psi_atanh(v)> for every word v of the right weight up to max_length."""
    f = phi(letter, d)
    z = (letter,)
    for n in range(1, max_length + 1):
        for v in compositions_into(letter, n) if n <= letter else []:
            if f[v] != psi_atanh(NCPoly({v: 1}), d)[z]:
                return False
    return True


def q_m(r: int, s: int, m: int) -> Fraction:
    """sum_{q=0}^m (-1)^q binom(s-r+q, m) binom(m, q) / (s-r+q)."""
    total = Fraction(0)
    for q in range(m + 1):
        denom = s - r + q
        if denom == 0:
            raise ZeroDivisionError(f"s - r + q = 0 at (r, s, m, q) = ({r}, {s}, {m}, {q})")
        total += Fraction((-1) ** q * comb(denom, m) * comb(m, q), denom)
    return total


q_m_identity = q_m


# -- coassociativity / duality helpers used by the checks -----------------------------

Triple = tuple[Word, Word, Word]


def _coassoc_sides(p: NCPoly, delta: Callable[[NCPoly], TensorPoly]) -> tuple[dict[Triple, Fraction], dict[Triple, Fraction]]:
    first = delta(p)
    left: dict[Triple, Fraction] = {}
    right: dict[Triple, Fraction] = {}
    for (u, v), c in first.items():
        for (a, b), x in delta(NCPoly({u: 1})).items():
            key = (a, b, v)
            left[key] = left.get(key, 0) + c * x
        for (a, b), x in delta(NCPoly({v: 1})).items():
            key = (u, a, b)
            right[key] = right.get(key, 0) + c * x
    clean = lambda m: {k: v for k, v in m.items() if v}
    return clean(left), clean(right)


def is_coassociative_on(p: NCPoly, delta: Callable[[NCPoly], TensorPoly]) -> bool:
    left, right = _coassoc_sides(p, delta)
    return left == right


def check_delta_bl_dual(u: Word, v: Word, d: DiamondProduct = ADDITIVE) -> bool:
    """<Delta_bl(w), u (x) v> == <w, u * v> for every word w of the same weight."""
    prod = gen_quasi_shuffle(NCPoly({tuple(u): 1}), NCPoly({tuple(v): 1}), d)
    weight = sum(u) + sum(v)
    for w in compositions(weight) if weight else [()]:
        if delta_bl(NCPoly({w: 1}), d)[(tuple(u), tuple(v))] != prod[w]:
            return False
    return True


@dataclass
class CheckReport:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, case) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(case)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checked} cases"
        if self.failures:
            line += f", {len(self.failures)} counterexamples, first {self.failures[0]}"
        return line


def words_up_to(max_letter: int, max_length: int, min_length: int = 0) -> Iterable[Word]:
    for n in range(min_length, max_length + 1):
        yield from itertools.product(range(1, max_letter + 1), repeat=n)


def run_hopf_check(which: str, bound: int, max_letter: int = 4) -> CheckReport:
    """Exhaustive degree-bounded check used by the CLI and the acceptance suite."""
    report = CheckReport(f"{which} (bound {bound})")
    if which == "decon-hom":
        for n in range(bound + 1):
            for k in range(n + 1):
                for u in words_up_to(max_letter, k, k):
                    for v in words_up_to(max_letter, n - k, n - k):
                        report.record(check_delta_star_homomorphism(u, v), (u, v))
    elif which == "antipode":
        for w in words_up_to(max_letter, bound, 1):
            report.record(check_antipode(w), w)
    elif which == "psi-compat":
        for w in words_up_to(max_letter, bound):
            report.record(check_psi_hopf_compat(w), w)
    elif which == "qm":
        for s in range(2, bound + 1):
            for r in range(1, s):
                for m in range(1, r + 1):
                    report.record(q_m(r, s, m) == 0, (r, s, m))
    elif which == "primitive":
        for n in range(1, bound + 1):
            report.record(check_phi_primitive(n), n)
    else:
        raise ValueError(f"unknown hopf check {which!r}")
    return report


HOPF_CHECKS = ("primitive", "qm", "decon-hom", "antipode", "psi-compat")
