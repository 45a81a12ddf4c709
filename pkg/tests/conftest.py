from fractions import Fraction

import pytest
from hypothesis import strategies as st

from bchkit.algebra import Alphabet, NcPoly

AB = Alphabet(("A", "B"))
ABC = Alphabet(("A", "B", "C"))


def poly(alphabet, terms):
    """Shorthand: ``poly(AB, {"AB": 1, "BA": -1})``."""
    return NcPoly.from_spellings(alphabet, terms)


rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 6))


def polys(alphabet=AB, max_len=3, min_len=0, max_terms=4):
    words = st.lists(
        st.integers(0, len(alphabet) - 1), min_size=min_len, max_size=max_len
    ).map(tuple)
    return st.dictionaries(words, rationals, max_size=max_terms).map(
        lambda d: NcPoly(alphabet, d)
    )


def constant_free(alphabet=AB, max_len=3, max_terms=4):
    return polys(alphabet, max_len=max_len, min_len=1, max_terms=max_terms)


@pytest.fixture
def A():
    return NcPoly.letter(AB, "A")


@pytest.fixture
def B():
    return NcPoly.letter(AB, "B")


@pytest.fixture(scope="session")
def direct8():
    from bchkit.series import bch_direct

    return bch_direct(8)


@pytest.fixture(scope="session")
def recurrence8():
    from bchkit.bch import bch_recurrence

    return bch_recurrence(8)


__all__ = ["AB", "ABC", "poly", "polys", "constant_free", "rationals", "Fraction"]
