from fractions import Fraction
from itertools import product

import pytest

from blockshuffle.hopf import (
    TensorPoly,
    antipode,
    check_antipode,
    check_delta_bl_dual,
    check_delta_star_homomorphism,
    check_phi_dual,
    check_phi_primitive,
    check_psi_hopf_compat,
    counit,
    delta_bl,
    delta_decon,
    is_coassociative_on,
    phi,
    q_m,
    run_hopf_check,
)
from blockshuffle.ncpoly import NCPoly, parse_word_expr
from blockshuffle.products import gen_quasi_shuffle
from blockshuffle.series_iso import compositions

from .conftest import w


def brute_phi(n):
    # sum over compositions of n into an odd number m of parts, weight 1/m
    out = {}
    for c in compositions(n):
        if len(c) % 2:
            out[c] = Fraction(1, len(c))
    return NCPoly(out)


def test_deconcatenation():
    d = delta_decon(w(1, 2))
    assert d == TensorPoly({((), (1, 2)): 1, ((1,), (2,)): 1, ((1, 2), ()): 1})
    assert counit(parse_word_expr("3 + z1")) == 3


def test_antipode_values():
    assert antipode(w(1, 2)) == w(2, 1)
    assert antipode(w(3)) == -w(3)
    assert antipode(NCPoly.one()) == 1


def test_antipode_involution():
    for n in range(4):
        for word in product(range(1, 4), repeat=n):
            assert antipode(antipode(w(*word))) == w(*word)


def test_antipode_is_anti_homomorphism():
    for a in product(range(1, 3), repeat=2):
        for b in product(range(1, 4), repeat=1):
            lhs = antipode(gen_quasi_shuffle(w(*a), w(*b)))
            assert lhs == gen_quasi_shuffle(antipode(w(*a)), antipode(w(*b)))


def test_phi_matches_composition_sum():
    for n in range(1, 9):
        assert phi(n) == brute_phi(n)
    assert phi(3) == parse_word_expr("z3 + 1/3*z1 z1 z1")


def test_delta_bl_letter():
    expected = TensorPoly({((), (3,)): 1, ((3,), ()): 1, ((1,), (1, 1)): -1, ((1, 1), (1,)): -1})
    assert delta_bl(w(3)) == expected


def test_delta_bl_properties():
    for word in [(1,), (2, 1), (1, 2, 1), (3, 1)]:
        d = delta_bl(w(*word))
        assert d.swap() == d
    assert is_coassociative_on(w(1, 2, 1), delta_bl)
    assert is_coassociative_on(w(2, 1), delta_decon)


@pytest.mark.parametrize("n", range(1, 9))
def test_phi_primitive(n):
    assert check_phi_primitive(n)


def test_phi_dual():
    for n in range(1, 6):
        assert check_phi_dual(n, 4)


def test_delta_bl_duality():
    for u in [(1,), (2,), (1, 1)]:
        for v in [(1,), (1, 2)]:
            assert check_delta_bl_dual(u, v)


def test_q_m():
    for s in range(2, 9):
        for r in range(1, s):
            for m in range(1, r + 1):
                assert q_m(r, s, m) == 0


def test_individual_checks():
    assert check_delta_star_homomorphism((1, 2), (3,))
    assert check_antipode((2, 1, 3))
    assert check_psi_hopf_compat((1, 2, 1))


def test_run_reports():
    report = run_hopf_check("decon-hom", 3, 3)
    assert report.passed and report.checked > 0
    assert report.summary().startswith("PASS")
    with pytest.raises(ValueError):
        run_hopf_check("nope", 2)
