"""Non-commutative polynomials over the alphabet z_1, z_2, ... with rational coefficients.

A word is a tuple of positive ints, ``(4, 3, 2, 2)`` standing for z4 z3 z2 z2;
the empty tuple is the unit.  Words compare lexicographically with z1 < z2 < ...,
which is plain tuple ordering.
"""
from __future__ import annotations

import json
import re
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from numbers import Rational
from typing import Union

Word = tuple[int, ...]
Coefficient = Union[int, Fraction]

EMPTY: Word = ()


def as_word(letters: Iterable[int]) -> Word:
    word = tuple(int(i) for i in letters)
    for i in word:
        if i < 1:
            raise ValueError(f"letter index must be >= 1, got {i}")
    return word


def _as_coefficient(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class NCPoly:
    """Finite rational combination of words.

    Instances are treated as immutable; zero coefficients are never stored, so
    two polynomials are equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, Coefficient] | None = None):
        clean: dict[Word, Fraction] = {}
        if terms:
            for word, c in terms.items():
                c = _as_coefficient(c)
                if c:
                    w = as_word(word)
                    c = clean.get(w, 0) + c
                    if c:
                        clean[w] = c
                    else:
                        clean.pop(w, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Word, Fraction]) -> NCPoly:
        # caller guarantees valid words and no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def from_dict(cls, terms: Mapping[Word, Coefficient]) -> NCPoly:
        """Build from an accumulator that may contain zero or int coefficients."""
        return cls._trusted({w: Fraction(c) for w, c in terms.items() if c})

    @classmethod
    def zero(cls) -> NCPoly:
        return cls._trusted({})

    @classmethod
    def one(cls) -> NCPoly:
        return cls._trusted({EMPTY: Fraction(1)})

    @classmethod
    def word(cls, *letters: int, coef: Coefficient = 1) -> NCPoly:
        return cls({as_word(letters): coef})

    @classmethod
    def letters(cls, combo: Mapping[int, Coefficient]) -> NCPoly:
        """Linear combination of single letters, ``{2: 1, 4: 1}`` -> z2 + z4."""
        return cls({(i,): c for i, c in combo.items()})

    # -- mapping-like access --------------------------------------------------
    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def __getitem__(self, word: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    coefficient = __getitem__

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- vector space ---------------------------------------------------------
    def __add__(self, other: NCPoly) -> NCPoly:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: NCPoly) -> NCPoly:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self) -> NCPoly:
        return scale(-1, self)

    def __mul__(self, c) -> NCPoly:
        if isinstance(c, NCPoly):
            return NotImplemented
        return scale(c, self)

    __rmul__ = __mul__

    def __truediv__(self, c) -> NCPoly:
        return scale(1 / _as_coefficient(c), self)

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({EMPTY: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- gradings -------------------------------------------------------------
    def max_length(self) -> int:
        """Longest word length; -1 for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    def length_part(self, n: int) -> NCPoly:
        return NCPoly._trusted({w: c for w, c in self._terms.items() if len(w) == n})

    def weight_part(self, n: int) -> NCPoly:
        """Terms whose letter indices sum to ``n``."""
        return NCPoly._trusted({w: c for w, c in self._terms.items() if sum(w) == n})

    def weights(self) -> list[int]:
        return sorted({sum(w) for w in self._terms})

    def is_letter_combination(self) -> bool:
        return all(len(w) == 1 for w in self._terms)

    def as_letter_dict(self) -> dict[int, Fraction]:
        if not self.is_letter_combination():
            raise ValueError(f"{self} is not a linear combination of letters")
        return {w[0]: c for w, c in self._terms.items()}

    def concat(self, other: NCPoly) -> NCPoly:
        return concat(self, other)

    def sorted_items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    # -- text / json ----------------------------------------------------------
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for word, c in self.sorted_items():
            body = " ".join(f"z{i}" for i in word) if word else "1"
            mag = abs(c)
            if mag == 1:
                text = body
            elif word:
                text = f"{mag}*{body}"
            else:
                text = str(mag)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, text))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"NCPoly({str(self)!r})"

    def to_json_obj(self) -> dict:
        return {
            "terms": [
                {"coef": f"{c.numerator}/{c.denominator}", "word": list(w)}
                for w, c in self.sorted_items()
            ]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> NCPoly:
        try:
            entries = obj["terms"]
            return cls({tuple(e["word"]): Fraction(e["coef"]) for e in _merge(entries)})
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed NCPoly JSON: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> NCPoly:
        return cls.from_json_obj(json.loads(text))

    @classmethod
    def parse(cls, text: str) -> NCPoly:
        return parse_word_expr(text)


def _merge(entries):
    # repeated words in JSON input are summed rather than overwritten
    acc: dict[tuple, Fraction] = {}
    for e in entries:
        w = tuple(e["word"])
        acc[w] = acc.get(w, 0) + Fraction(e["coef"])
    return [{"word": w, "coef": c} for w, c in acc.items()]


def add(p: NCPoly, q: NCPoly) -> NCPoly:
    out = dict(p.terms)
    for w, c in q.items():
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return NCPoly._trusted(out)


def scale(c, p: NCPoly) -> NCPoly:
    c = _as_coefficient(c)
    if not c:
        return NCPoly.zero()
    return NCPoly._trusted({w: c * v for w, v in p.items()})


def concat(p: NCPoly, q: NCPoly) -> NCPoly:
    out: dict[Word, Fraction] = {}
    for u, a in p.items():
        for v, b in q.items():
            w = u + v
            out[w] = out.get(w, 0) + a * b
    return NCPoly.from_dict(out)


def concat_power(p: NCPoly, n: int) -> NCPoly:
    result = NCPoly.one()
    for _ in range(n):
        result = concat(result, p)
    return result


def pair(p: NCPoly, q: NCPoly) -> Fraction:
    """Pairing in which distinct words are orthogonal and every word has norm 1."""
    if len(q) < len(p):
        p, q = q, p
    return sum((c * q[w] for w, c in p.items()), Fraction(0))


def linear_map(p: NCPoly, on_word) -> NCPoly:
    """Extend ``on_word: Word -> NCPoly | Mapping`` linearly over ``p``."""
    out: dict[Word, Fraction] = {}
    for w, c in p.items():
        image = on_word(w)
        items = image.items() if isinstance(image, (NCPoly, Mapping)) else image
        for v, d in items:
            out[v] = out.get(v, 0) + c * d
    return NCPoly.from_dict(out)


# -- word-expression syntax --------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<letter>z(?P<idx>-?\d+))|(?P<op>[-+*])|(?P<bad>\S))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def parse_word_expr(text: str) -> NCPoly:
    """Parse expressions like ``"z2z3 + z3 z2 - 1/3*z6"``; ``"1"`` is the empty word.

    A term is an optional rational coefficient, optionally followed by ``*``,
    then juxtaposed letters.  A bare number is a constant term.
    """
    tokens = []
    pos = 0
    for m in _TOKEN.finditer(text):
        if m.start() != pos and text[pos:m.start()].strip():
            raise ParseError("unexpected character", pos)
        pos = m.end()
        if m.group("bad"):
            raise ParseError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        if m.group("num"):
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("letter"):
            idx = int(m.group("idx"))
            if idx < 1:
                raise ParseError(f"letter index must be positive, got z{idx}", m.start("letter"))
            tokens.append(("letter", idx, m.start("letter")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
    if text[pos:].strip():
        raise ParseError("unexpected trailing input", pos)
    if not tokens:
        raise ParseError("empty expression", 0)

    out: dict[Word, Fraction] = {}
    i = 0
    n = len(tokens)
    expect_term = True
    sign = 1
    while i < n:
        kind, val, where = tokens[i]
        if expect_term:
            if kind == "op" and val in "+-":
                if val == "-":
                    sign = -sign
                i += 1
                continue
            coef = Fraction(1)
            have_num = False
            if kind == "num":
                coef = Fraction(val)
                have_num = True
                i += 1
                if i < n and tokens[i][0] == "op" and tokens[i][1] == "*":
                    i += 1
                    if i >= n or tokens[i][0] != "letter":
                        raise ParseError("expected a letter after '*'", tokens[i - 1][2])
            elif kind != "letter":
                raise ParseError(f"unexpected {val!r}", where)
            letters = []
            while i < n and tokens[i][0] == "letter":
                letters.append(tokens[i][1])
                i += 1
            if not letters and not have_num:
                raise ParseError("expected a term", where)
            w = tuple(letters)
            out[w] = out.get(w, 0) + sign * coef
            sign = 1
            expect_term = False
        else:
            if kind == "op" and val in "+-":
                sign = -1 if val == "-" else 1
                expect_term = True
                i += 1
            else:
                raise ParseError(f"expected '+' or '-' before {val!r}", where)
    if expect_term:
        raise ParseError("dangling operator", tokens[-1][2])
    return NCPoly.from_dict(out)
