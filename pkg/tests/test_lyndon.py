from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockshuffle.lyndon import (
    LyndonBasisExpr,
    cfl_factorize,
    decompose_shuffle,
    decompose_star,
    divisors,
    is_lyndon,
    lyndon_count,
    lyndon_words,
    lyndon_words_by_weight,
    mobius,
)
from blockshuffle.ncpoly import NCPoly, parse_word_expr
from blockshuffle.products import ZERO

from .conftest import w


def brute_is_lyndon(word):
    # primitive and strictly smallest among its rotations
    n = len(word)
    rotations = [word[i:] + word[:i] for i in range(1, n)]
    return n > 0 and all(word < r for r in rotations)


def test_is_lyndon_matches_rotation_criterion():
    for n in range(1, 7):
        for word in product(range(1, 4), repeat=n):
            assert is_lyndon(word) == brute_is_lyndon(word), word


def test_small_lists():
    assert lyndon_words(2, 3) == [(1, 1, 2), (1, 2, 2)]
    assert lyndon_words(3, 1) == [(1,), (2,), (3,)]
    assert lyndon_words(2, 4) == [(1, 1, 1, 2), (1, 1, 2, 2), (1, 2, 2, 2)]


def test_enumeration_is_complete():
    for m in range(1, 4):
        for n in range(1, 7):
            brute = sorted(x for x in product(range(1, m + 1), repeat=n) if brute_is_lyndon(x))
            assert lyndon_words(m, n) == brute


@pytest.mark.parametrize(
    "word, factors",
    [
        ((1, 2, 1, 1), [(1, 2), (1,), (1,)]),
        ((2, 1), [(2,), (1,)]),
        ((1, 1, 2, 1, 2), [(1, 1, 2, 1, 2)]),
        ((3, 2, 1), [(3,), (2,), (1,)]),
    ],
)
def test_cfl_examples(word, factors):
    assert cfl_factorize(word) == factors


@given(st.lists(st.integers(1, 4), min_size=1, max_size=10).map(tuple))
def test_cfl_property(word):
    factors = cfl_factorize(word)
    assert sum(factors, ()) == word
    assert all(is_lyndon(f) for f in factors)
    assert all(a >= b for a, b in zip(factors, factors[1:]))


def test_counts_match_enumeration():
    for m in range(1, 4):
        for n in range(1, 9):
            assert lyndon_count("length", n, m) == len(lyndon_words(m, n))


def test_weight_counts():
    for n in range(1, 11):
        assert lyndon_count("weight", n) == len(lyndon_words_by_weight(n))
    assert [lyndon_count("weight", n) for n in range(1, 7)] == [1, 1, 2, 3, 6, 9]


def test_necklace_values():
    assert lyndon_count("length", 3, 2) == 2
    assert lyndon_count("length", 6, 2) == 9


def test_mobius_and_divisors():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_count_errors():
    with pytest.raises(ValueError):
        lyndon_count("length", 3)
    with pytest.raises(ValueError):
        lyndon_count("depth", 3, 2)


def test_shuffle_decomposition_example():
    expr = decompose_shuffle(w(2, 1, 1))
    expected = {((1,), (1,), (2,)): Fraction(1, 2), ((1,), (1, 2)): -1, ((1, 1, 2),): 1}
    assert expr.terms == expected
    assert expr.expand() == w(2, 1, 1)


def test_star_decomposition_examples():
    assert decompose_star(w(2, 1)).terms == {((1,), (2,)): 1, ((1, 2),): -1}
    assert decompose_star(w(1, 1)).terms == {((1,), (1,)): Fraction(1, 2)}


def test_round_trips_exhaustive():
    for n in range(1, 5):
        for word in product(range(1, 4), repeat=n):
            W = w(*word)
            assert decompose_star(W).expand() == W
            assert decompose_shuffle(W).expand() == W
            assert decompose_star(W, ZERO).expand() == W


def test_decomposition_of_polynomial_with_constant():
    p = parse_word_expr("3 + z1 z3 - 1/2*z2 z2")
    assert decompose_star(p).expand() == p


def test_rejects_non_lyndon_keys():
    with pytest.raises(ValueError):
        LyndonBasisExpr({((2, 1),): 1}, "sh")
    assert LyndonBasisExpr({}, "star").expand() == NCPoly.zero()
