from fractions import Fraction

from hypothesis import strategies as st

from blockshuffle.ncpoly import NCPoly

letters = st.integers(min_value=1, max_value=4)
words = st.lists(letters, max_size=3).map(tuple)
nonempty_words = st.lists(letters, min_size=1, max_size=3).map(tuple)
coefs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.dictionaries(words, coefs, max_size=3).map(NCPoly)
small_polys = st.dictionaries(st.lists(letters, max_size=2).map(tuple), coefs, max_size=2).map(NCPoly)
letter_combos = st.dictionaries(st.integers(1, 5), coefs.filter(bool), min_size=1, max_size=3)


def frac(x) -> Fraction:
    return Fraction(x)
