"""Binary words, block decomposition, and relations among multiple zeta values.

A binary word is a tuple over {0, 1} standing for e0/e1.  The iterated
integral ic(0; a_1 ... a_n; 1) of the forms dt/(t - a_i) is written ic(b) for
the full word b = (0, a_1, ..., a_n, 1).  With phi the usual encoding of an
index, zeta(n_1, ..., n_r) = (-1)^r ic(phi(n_1, ..., n_r)).

z-words are linked to binary words through block lengths: a binary word
starting with e0 factors uniquely into maximal alternating blocks, and the
z-word records their lengths.
"""
from __future__ import annotations

import json
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .mzv import EvalParams, MZVIndex, PrecisionError, mzv_eval, pi_multiple, zeta_twos_closed_form
from .ncpoly import NCPoly, Word, concat_power
from .products import ADDITIVE, block_shuffle, shuffle

BinaryWord = tuple[int, ...]


# -- conversions ------------------------------------------------------------------

def _bits(b: Iterable[int]) -> BinaryWord:
    b = tuple(int(x) for x in b)
    if any(x not in (0, 1) for x in b):
        raise ValueError(f"binary words use only 0 and 1: {b}")
    return b


def format_binary(b: BinaryWord) -> str:
    return "".join(f"e{x}" for x in b)


def parse_binary(text: str) -> BinaryWord:
    """Accepts '0101', 'e0e1e0e1' or '0 1 0 1'."""
    cleaned = text.replace("e", "").replace(" ", "").replace(",", "")
    if not cleaned or set(cleaned) - {"0", "1"}:
        raise ValueError(f"not a binary word: {text!r}")
    return tuple(int(c) for c in cleaned)


def phi_index(idx: Iterable[int]) -> BinaryWord:
    """Full binary word 0; 1 0^(n_1 - 1) ... 1 0^(n_r - 1); 1."""
    idx = tuple(idx)
    if any(n < 1 for n in idx):
        raise ValueError(f"index entries must be positive: {idx}")
    out = [0]
    for n in idx:
        out.append(1)
        out.extend([0] * (n - 1))
    out.append(1)
    return tuple(out)


def block_decompose(b: Iterable[int]) -> Word:
    b = _bits(b)
    if not b:
        raise ValueError("cannot decompose the empty binary word")
    if b[0] != 0:
        raise ValueError("binary word must start with e0")
    lengths, run = [], 1
    for x, y in zip(b, b[1:]):
        if x == y:
            lengths.append(run)
            run = 1
        else:
            run += 1
    lengths.append(run)
    return tuple(lengths)


def z_word_to_binary(w: Iterable[int]) -> BinaryWord:
    w = tuple(w)
    if not w:
        raise ValueError("the empty z-word has no binary word")
    if any(n < 1 for n in w):
        raise ValueError(f"block lengths must be positive: {w}")
    out: list[int] = []
    start = 0
    for n in w:
        out.extend((start + i) % 2 for i in range(n))
        start = out[-1]
    return tuple(out)


def _interior_index(interior: BinaryWord) -> MZVIndex:
    out: list[int] = []
    for x in interior:
        if x == 1:
            out.append(1)
        else:
            out[-1] += 1
    return tuple(out)


def is_integral_shape(b: BinaryWord) -> bool:
    return len(b) >= 2 and b[0] == 0 and b[-1] == 1


def is_convergent_interior(interior: BinaryWord) -> bool:
    return not interior or (interior[0] == 1 and interior[-1] == 0)


def binary_to_index(b: Iterable[int]) -> MZVIndex:
    """Inverse of phi_index, defined on words of convergent shape only."""
    b = _bits(b)
    if not is_integral_shape(b):
        raise ValueError(f"{format_binary(b)} does not start with e0 and end with e1")
    interior = b[1:-1]
    if not is_convergent_interior(interior):
        raise ValueError(f"{format_binary(b)} is divergent: interior must start with e1 and end with e0")
    return _interior_index(interior)


def parity_vanishes(w: Iterable[int]) -> bool:
    """True iff the binary word of ``w`` ends in e0, so ic(w) = 0."""
    return z_word_to_binary(w)[-1] == 0


def parity_vanishes_arith(w: Iterable[int]) -> bool:
    w = tuple(w)
    return sum(w) % 2 == len(w) % 2


# -- shuffle regularisation ---------------------------------------------------------

def _bump(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


@lru_cache(maxsize=None)
def _regularize_interior(word: BinaryWord) -> tuple[tuple[BinaryWord, Fraction], ...]:
    # the constant term in T once e1 (at the end) and e0 (at the start) are set to T
    if is_convergent_interior(word):
        return ((word, Fraction(1)),)
    out: dict[BinaryWord, Fraction] = {}
    m = _trailing(word, 1)
    if m:
        u = word[:-m]
        if not u:
            return ()
        # (u e1^(m-1)) sh e1 = m u e1^m + sum of words with e1 inserted inside u
        for pos in range(len(u)):
            inner = u[:pos] + (1,) + u[pos:] + (1,) * (m - 1)
            for k, c in _regularize_interior(inner):
                _bump(out, k, -c / m)
        return tuple(sorted(out.items()))
    m = _leading(word, 0)
    u = word[m:]
    if not u:
        return ()
    for pos in range(1, len(u) + 1):
        inner = (0,) * (m - 1) + u[:pos] + (0,) + u[pos:]
        for k, c in _regularize_interior(inner):
            _bump(out, k, -c / m)
    return tuple(sorted(out.items()))


def _trailing(word: BinaryWord, x: int) -> int:
    n = 0
    while n < len(word) and word[-1 - n] == x:
        n += 1
    return n


def _leading(word: BinaryWord, x: int) -> int:
    n = 0
    while n < len(word) and word[n] == x:
        n += 1
    return n


def shuffle_regularize(b: Iterable[int]) -> dict[BinaryWord, Fraction]:
    """Shuffle-regularised value (T = 0) of ic(b) as a combination of convergent full words."""
    b = _bits(b)
    if not is_integral_shape(b):
        raise ValueError(f"{format_binary(b)} does not start with e0 and end with e1")
    return {(0,) + w + (1,): c for w, c in _regularize_interior(b[1:-1])}


# -- rendering ------------------------------------------------------------------

@dataclass
class Rendering:
    """Rational combination of zeta values; ``regularized`` marks divergent inputs."""

    terms: dict[MZVIndex, Fraction] = field(default_factory=dict)
    regularized: bool = False

    def add(self, idx: MZVIndex, c) -> None:
        _bump(self.terms, idx, Fraction(c))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def weights(self) -> set[int]:
        return {sum(idx) for idx in self.terms}

    def __str__(self) -> str:
        return render_zeta_sum(self.terms)


def zeta_name(idx: MZVIndex) -> str:
    return "zeta(" + ",".join(map(str, idx)) + ")" if idx else "1"


def render_zeta_sum(terms: dict[MZVIndex, Fraction]) -> str:
    if not terms:
        return "0"
    parts = []
    for idx, c in sorted(terms.items(), key=lambda t: (-len(t[0]), t[0])):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = zeta_name(idx) if mag == 1 else f"{mag}*{zeta_name(idx)}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def ic_binary(b: Iterable[int]) -> Rendering:
    """ic of a full binary word as zeta values, regularising if needed."""
    b = _bits(b)
    out = Rendering()
    interior = b[1:-1]
    if is_convergent_interior(interior):
        pieces = {b: Fraction(1)}
    else:
        out.regularized = True
        pieces = shuffle_regularize(b)
    for word, c in pieces.items():
        idx = binary_to_index(word)
        out.add(idx, c * (-1) ** len(idx))
    return out


def ic_render(p: NCPoly) -> Rendering:
    """ic(p) as a rational combination of zeta values."""
    out = Rendering()
    for w, c in p.items():
        if not w:
            raise ValueError("ic is not defined on the empty z-word")
        if parity_vanishes(w):
            continue
        part = ic_binary(z_word_to_binary(w))
        out.regularized |= part.regularized
        for idx, v in part.terms.items():
            out.add(idx, c * v)
    return out


# -- relations -----------------------------------------------------------------

@dataclass
class Relation:
    """A z-polynomial lying in the kernel of ic, with its zeta-level rendering (= 0)."""

    lhs: NCPoly
    rendered: dict[MZVIndex, Fraction]
    provenance: str
    regularized: bool = False
    # optional right-hand side c * pi^k, so that sum(rendered) = c * pi^k
    closed_form: tuple[Fraction, int] | None = None

    @classmethod
    def from_lhs(cls, lhs: NCPoly, provenance: str) -> Relation:
        r = ic_render(lhs)
        return cls(lhs, r.terms, provenance, r.regularized)

    def weights(self) -> set[int]:
        out = {sum(idx) for idx in self.rendered}
        out |= {sum(w) - 2 for w in self.lhs.words()}
        if self.closed_form is not None:
            out.add(self.closed_form[1])
        return out

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def __str__(self) -> str:
        rhs = "0"
        if self.closed_form is not None:
            c, k = self.closed_form
            rhs = f"{c}*pi^{k}"
        return f"{render_zeta_sum(self.rendered)} = {rhs}"

    def to_json_obj(self) -> dict:
        obj = {
            "lhs": self.lhs.to_json_obj(),
            "rendered": [
                {"coef": str(c), "index": list(idx)}
                for idx, c in sorted(self.rendered.items(), key=lambda t: (len(t[0]), t[0]))
            ],
            "regularized": self.regularized,
            "provenance": self.provenance,
        }
        if self.closed_form is not None:
            obj["closed_form"] = {"coef": str(self.closed_form[0]), "pi_power": self.closed_form[1]}
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> Relation:
        closed = obj.get("closed_form")
        return cls(
            NCPoly.from_json_obj(obj["lhs"]),
            {tuple(t["index"]): Fraction(t["coef"]) for t in obj["rendered"]},
            obj["provenance"],
            bool(obj["regularized"]),
            (Fraction(closed["coef"]), int(closed["pi_power"])) if closed else None,
        )


def _fmt(w: Word) -> str:
    return " ".join(f"z{i}" for i in w)


def relation_from_block_product(u: Iterable[int], v: Iterable[int]) -> Relation:
    u, v = tuple(u), tuple(v)
    if not u or not v:
        raise ValueError("both words must be nonempty")
    lhs = block_shuffle(NCPoly({u: 1}), NCPoly({v: 1}))
    return Relation.from_lhs(lhs, f"product: ({_fmt(u)}) bsh ({_fmt(v)})")


def quasipower_relations(z: NCPoly, k: int) -> list[Relation]:
    """The odd power z^(2k+1) - z^(diamond 2k+1)/(2k+1) and the even power z^(2k), by weight."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not z.is_letter_combination() or not z:
        raise ValueError("z must be a nonzero combination of single letters")
    letters = z.as_letter_dict()
    odd = concat_power(z, 2 * k + 1) - NCPoly.letters(ADDITIVE.power(letters, 2 * k + 1)) / (2 * k + 1)
    even = concat_power(z, 2 * k)
    out = []
    for label, poly, power in (("odd", odd, 2 * k + 1), ("even", even, 2 * k)):
        for wt in poly.weights():
            part = poly.weight_part(wt)
            out.append(Relation.from_lhs(part, f"quasipower {label}: z = {z}, power {power}, index sum {wt}"))
    return out


# -- compositions with bounded parts ---------------------------------------------------

@lru_cache(maxsize=None)
def bounded_compositions(k: int, N: int, r: int) -> int:
    """Number of compositions of k into N parts, each between 1 and r."""
    if N < 0 or k < 0 or r < 0:
        raise ValueError("arguments must be non-negative")
    if N == 0:
        return int(k == 0)
    return sum(bounded_compositions(k - j, N - 1, r) for j in range(1, min(r, k) + 1))


def bounded_compositions_plus(k: int, N: int, r: int) -> int:
    """Those with at least one part equal to r."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return bounded_compositions(k, N, r) - bounded_compositions(k, N, r - 1)


# -- families of closed forms -----------------------------------------------------------

def bunchsof2_words(n: int, k: int, p: int) -> NCPoly:
    """Words of (z_2 + z_4 + ... + z_{2p+2})^(2n+1) with index sum 2(k+2n+1) using z_{2p+2}."""
    if n < 1 or k < 0 or p < 1:
        raise ValueError("need n >= 1, k >= 0, p >= 1")
    z = NCPoly.letters({2 * j: 1 for j in range(1, p + 2)})
    part = concat_power(z, 2 * n + 1).weight_part(2 * (k + 2 * n + 1))
    return NCPoly({w: c for w, c in part.items() if 2 * p + 2 in w})


def bunchsof2_indices(n: int, k: int, p: int) -> list[MZVIndex]:
    """The index set obtained by rendering the words of bunchsof2_words."""
    out = []
    for w in bunchsof2_words(n, k, p).words():
        out.append(binary_to_index(z_word_to_binary(w)))
    return sorted(out)


def bunchsof2_relation(n: int, k: int, p: int) -> Relation:
    """sum of zeta over the set equals |P+|/(2n+1) zeta({2}^(k+2n))."""
    words = bunchsof2_words(n, k, p)
    m = k + 2 * n + 1
    plus = bounded_compositions_plus(m, 2 * n + 1, p + 1)
    coef = Fraction(plus, 2 * n + 1)
    lhs = words - NCPoly({(2 * m,): coef})
    rel = Relation.from_lhs(lhs, f"bunchsof2: n={n}, k={k}, p={p}")
    # move the zeta({2}^(m-1)) term to the right as an exact multiple of pi
    twos = (2,) * (m - 1)
    c = rel.rendered.pop(twos, Fraction(0))
    sign = (-1) ** k  # every rendered term has depth k + 2n
    rel.rendered = {idx: v * sign for idx, v in rel.rendered.items()}
    rel.closed_form = (-c * sign * zeta_twos_closed_form(m - 1), 2 * (m - 1))
    return rel


def shuffle_of_sequences(a: tuple[int, ...], b: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All interleavings with multiplicity (as position choices)."""
    n = len(a) + len(b)
    for pos in combinations(range(n), len(a)):
        out, ia, ib = [], 0, 0
        chosen = set(pos)
        for i in range(n):
            if i in chosen:
                out.append(a[ia])
                ia += 1
            else:
                out.append(b[ib])
                ib += 1
        yield tuple(out)


def bowman_bradley_relation(n: int, k: int) -> Relation:
    """zeta({2}^k sh {1,3}^n) = binom(2n+k, k) pi^(4n+2k) / ((2n+1)(4n+2k+1)!)."""
    if n < 0 or k < 0 or n + k == 0:
        raise ValueError("need n, k >= 0, not both zero")
    terms: dict[MZVIndex, Fraction] = {}
    for idx in shuffle_of_sequences((2,) * k, (1, 3) * n):
        _bump(terms, idx, 1)
    weight = 4 * n + 2 * k
    coef = Fraction(math.comb(2 * n + k, k), (2 * n + 1) * math.factorial(weight + 1))
    lhs = NCPoly()
    return Relation(lhs, terms, f"bowman-bradley: n={n}, k={k}", False, (coef, weight))


# -- numerical verification ---------------------------------------------------------

@dataclass
class VerifyReport:
    provenance: str
    value: float
    target: float
    residual: float
    tail_bound: float
    tolerance: float
    regularized: bool
    passed: bool

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        reg = " [regularized]" if self.regularized else ""
        return (
            f"{status} {self.provenance}{reg}: residual {self.residual:.3e} "
            f"(tail bound {self.tail_bound:.1e}, tolerance {self.tolerance:.1e})"
        )

    def to_json_obj(self) -> dict:
        return {
            "provenance": self.provenance,
            "residual": self.residual,
            "tail_bound": self.tail_bound,
            "tolerance": self.tolerance,
            "regularized": self.regularized,
            "pass": self.passed,
        }


def evaluate_combination(terms: dict[MZVIndex, Fraction], params: EvalParams | None = None) -> tuple[float, float]:
    values, bound = [], 0.0
    for idx, c in terms.items():
        v, t = mzv_eval(idx, params)
        values.append(float(c) * v)
        bound += abs(float(c)) * t
    return math.fsum(values), bound


def verify_relation(rel: Relation, params: EvalParams | None = None, tol: float = 1e-4) -> VerifyReport:
    params = params or EvalParams()
    value, bound = evaluate_combination(rel.rendered, params)
    target = pi_multiple(*rel.closed_form) if rel.closed_form else 0.0
    if bound > tol:
        raise PrecisionError(
            f"{rel.provenance}: tail bound {bound:.2e} exceeds tolerance {tol:.1e} at N={params.N}"
        )
    residual = value - target
    passed = abs(residual) < bound + tol
    return VerifyReport(rel.provenance, value, target, residual, bound, tol, rel.regularized, passed)


def bowman_bradley_check(n: int, k: int, params: EvalParams | None = None, tol: float = 1e-4) -> VerifyReport:
    if 4 * n + 2 * k > 12:
        raise ValueError("weight too large for desk-scale evaluation (limit 12)")
    return verify_relation(bowman_bradley_relation(n, k), params, tol)


def ic_numeric(b: Iterable[int], params: EvalParams | None = None) -> float:
    """Numerical ic of a full binary word (regularised at T = 0 when divergent)."""
    return evaluate_combination(ic_binary(b).terms, params)[0]


def shuffle_interiors(u: BinaryWord, v: BinaryWord) -> dict[BinaryWord, Fraction]:
    """Full words whose interiors are the shuffles of those of u and v."""
    prod = shuffle(NCPoly({tuple(x + 1 for x in u[1:-1]): 1}), NCPoly({tuple(x + 1 for x in v[1:-1]): 1}))
    return {(0,) + tuple(x - 1 for x in w) + (1,): c for w, c in prod.items()}


FAMILIES = ("product", "quasipower", "bunchsof2", "bowman-bradley")
