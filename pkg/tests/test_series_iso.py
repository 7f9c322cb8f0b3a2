from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from blockshuffle.ncpoly import NCPoly, parse_word_expr
from blockshuffle.products import ZERO, block_shuffle, gen_quasi_shuffle, hoffman_quasi_shuffle, shuffle
from blockshuffle.series import FormalSeries, series_atanh, series_expm1, series_log1p, series_tanh
from blockshuffle.series_iso import (
    bracket,
    check_exp_tanh,
    check_expgeo,
    check_geometric_identity,
    check_log_exp,
    compose_compositions,
    composition_action,
    compositions,
    compositions_into,
    psi,
    psi_atanh,
    psi_direct,
    psi_tanh,
)

from .conftest import w


def test_compositions():
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(compositions(7)) == 2**6
    assert compositions_into(4, 2) == [(1, 3), (2, 2), (3, 1)]


def test_compose_compositions():
    # J groups the parts of I
    assert compose_compositions((2, 1), (1, 2, 3)) == (3, 3)
    with pytest.raises(ValueError):
        compose_compositions((2, 2), (1, 2, 3))


def test_bracket_and_action():
    assert bracket((1, 2, 3)) == w(6)
    assert bracket((1, 2), ZERO) == 0
    assert composition_action((1, 2), (4, 1, 2)) == w(4, 3)


def test_psi_values():
    assert psi_tanh(w(1, 2, 3)) == parse_word_expr("z1 z2 z3 - 1/3*z6")
    assert psi_atanh(w(1, 2, 3)) == parse_word_expr("z1 z2 z3 + 1/3*z6")
    assert psi_tanh(w(5)) == w(5)
    assert psi(series_expm1(2), w(1, 2)) == parse_word_expr("z1 z2 + 1/2*z3")


def test_psi_direct_agrees():
    for n in range(1, 5):
        for word in product(range(1, 4), repeat=n):
            for f in (series_tanh(4), series_expm1(4), FormalSeries([0, 2, -1, 3, 5])):
                assert psi(f, w(*word)) == psi_direct(f, w(*word))


def test_psi_requires_enough_terms():
    with pytest.raises(ValueError):
        psi(series_tanh(2), w(1, 1, 1))


def test_tanh_is_shuffle_to_star_hom():
    for a, b in product(product(range(1, 4), repeat=2), product(range(1, 4), repeat=1)):
        U, V = w(*a), w(*b)
        assert psi_tanh(shuffle(U, V)) == gen_quasi_shuffle(psi_tanh(U), psi_tanh(V))


def test_exp_is_shuffle_to_stuffle_hom():
    # the classical exp isomorphism sends shuffle to Hoffman's quasi-shuffle
    f = series_expm1(4)
    for a, b in product(product(range(1, 3), repeat=2), product(range(1, 3), repeat=2)):
        U, V = w(*a), w(*b)
        assert psi(f, shuffle(U, V)) == hoffman_quasi_shuffle(psi(f, U), psi(f, V))


@given(st.lists(st.integers(1, 4), min_size=1, max_size=5).map(tuple))
def test_inverse_pairs(word):
    W = w(*word)
    n = len(word)
    assert psi(series_tanh(n), psi(series_atanh(n), W)) == W
    assert psi(series_expm1(n), psi(series_log1p(n), W)) == W


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple))
def test_psi_composition_law(word):
    # Psi_f o Psi_g = Psi_{f o g}
    n = len(word)
    f, g = series_tanh(n), series_expm1(n)
    assert psi(f, psi(g, w(*word))) == psi(f.compose(g), w(*word))


ZS = ["z2", "z2 + z4", "z1 + z3"]


@pytest.mark.parametrize("z", ZS)
def test_generating_identities(z):
    p = parse_word_expr(z)
    assert check_geometric_identity(series_tanh(5), p, 5)
    assert check_geometric_identity(series_expm1(5), p, 5)
    assert check_exp_tanh(p, 5)
    assert check_expgeo(p, 5)


@pytest.mark.parametrize("bullet", ["sh", "bsh"])
def test_log_exp(bullet):
    assert check_log_exp(parse_word_expr("z1 + 2*z3"), bullet, 4)


def test_block_shuffle_of_letters_is_psi_image():
    # z_a bsh z_b differs from the shuffle only through the letter bracket
    assert block_shuffle(w(3), w(5)) == shuffle(w(3), w(5))
    assert psi_tanh(shuffle(w(1), w(1))) == block_shuffle(w(1), w(1))
    assert block_shuffle(w(1), w(1)) == NCPoly({(1, 1): 2})
