"""Seeded random inputs for the identity checks.

All functions take an explicit :class:`random.Random`; nothing here touches
global random state.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Alphabet, NcPoly, commutator, linear_combination


def random_rational(rng: random.Random, bound: int = 5) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_word(rng: random.Random, alphabet: Alphabet, length: int) -> tuple:
    return tuple(rng.randrange(len(alphabet)) for _ in range(length))


def random_poly(
    rng: random.Random,
    alphabet: Alphabet,
    max_degree: int,
    terms: int = 4,
    min_degree: int = 1,
) -> NcPoly:
    """A few random words of length ``min_degree..max_degree`` with random coefficients."""
    out = {}
    for _ in range(rng.randint(1, terms)):
        w = random_word(rng, alphabet, rng.randint(min_degree, max_degree))
        out[w] = out.get(w, 0) + random_rational(rng)
    return NcPoly(alphabet, out)


def random_homogeneous(rng: random.Random, alphabet: Alphabet, degree: int, terms: int = 4) -> NcPoly:
    return random_poly(rng, alphabet, degree, terms, min_degree=degree)


def random_bracketing(rng: random.Random, alphabet: Alphabet, degree: int) -> NcPoly:
    """A random binary bracketing of a random letter sequence."""
    if degree == 1:
        return NcPoly._trusted(alphabet, {(rng.randrange(len(alphabet)),): Fraction(1)})
    split = rng.randint(1, degree - 1)
    return commutator(
        random_bracketing(rng, alphabet, split),
        random_bracketing(rng, alphabet, degree - split),
    )


def random_lie_homogeneous(rng: random.Random, alphabet: Alphabet, degree: int, terms: int = 3) -> NcPoly:
    """Random combination of bracketings of one degree (may come out zero)."""
    return linear_combination(
        alphabet,
        ((random_rational(rng), random_bracketing(rng, alphabet, degree)) for _ in range(rng.randint(1, terms))),
    )


def random_lie(rng: random.Random, alphabet: Alphabet, max_degree: int, terms: int = 3) -> NcPoly:
    """Random Lie polynomial, possibly mixing degrees 1..max_degree."""
    return linear_combination(
        alphabet,
        (
            (random_rational(rng), random_bracketing(rng, alphabet, rng.randint(1, max_degree)))
            for _ in range(rng.randint(1, terms))
        ),
    )


def random_without_pure_powers(
    rng: random.Random, alphabet: Alphabet, letter: int, degree: int, terms: int = 4
) -> NcPoly:
    """Nonzero homogeneous polynomial with no ``letter**degree`` term."""
    pure = (letter,) * degree
    while True:
        p = random_homogeneous(rng, alphabet, degree, terms)
        p = NcPoly(alphabet, {w: c for w, c in p.items() if w != pure})
        if not p.is_zero():
            return p
