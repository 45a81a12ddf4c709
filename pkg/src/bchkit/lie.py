"""Right-normed bracketing, the Dynkin test and executable lemma checks.

The bracketing map ``rmap`` sends a word ``w1 w2 ... wn`` to
``[w1, [w2, [..., [w(n-1), wn]...]]]`` and is extended linearly.  A
homogeneous polynomial ``P`` of degree ``n`` is a Lie polynomial exactly when
``rmap(P) == n * P``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .algebra import (
    Alphabet,
    NcPoly,
    Word,
    ad,
    commutator,
    linear_combination,
    poly_mul,
    poly_scale,
    pure_power_coefficients,
)


class NotLieError(ValueError):
    """The input failed the Dynkin test ``rmap(P) == n * P``."""


@lru_cache(maxsize=65536)
def _bracket_word(alphabet: Alphabet, word: Word) -> NcPoly:
    if len(word) == 1:
        return NcPoly._trusted(alphabet, {word: Fraction(1)})
    head = NcPoly._trusted(alphabet, {word[:1]: Fraction(1)})
    return commutator(head, _bracket_word(alphabet, word[1:]))


def bracket_word(alphabet: Alphabet, word: Word) -> NcPoly:
    """Expansion of the right-normed bracket of a single nonempty word."""
    word = tuple(word)
    if not word:
        raise ValueError("right-normed bracketing is undefined on the empty word")
    return _bracket_word(alphabet, word)


def rmap(p: NcPoly) -> NcPoly:
    """Linear extension of right-normed bracketing; ``p`` must be constant-free."""
    if p.constant_term():
        raise ValueError("rmap is undefined on the empty word (nonzero constant term)")
    alph = p.alphabet
    return linear_combination(alph, ((c, _bracket_word(alph, w)) for w, c in p.items()))


def _homogeneous_degree(p: NcPoly) -> int:
    if p.is_zero():
        raise ValueError("expected a nonzero homogeneous polynomial, got 0")
    degs = p.degrees()
    if len(degs) != 1:
        raise ValueError(f"expected a homogeneous polynomial, got degrees {sorted(degs)}")
    (n,) = degs
    if n < 1:
        raise ValueError("expected degree >= 1")
    return n


def dynkin_is_lie(p: NcPoly) -> bool:
    """True iff the homogeneous ``p`` of degree n satisfies ``rmap(p) == n*p``.

    Lie implies the identity; conversely the identity gives ``p = rmap(p)/n``,
    which lies in the image of rmap and so is a Lie polynomial.
    """
    n = _homogeneous_degree(p)
    return rmap(p) == poly_scale(n, p)


def is_lie(p: NcPoly) -> bool:
    """Dynkin test applied degree by degree; zero counts as Lie."""
    if p.constant_term():
        return False
    for n in p.degrees():
        part = NcPoly._trusted(p.alphabet, {w: c for w, c in p.items() if len(w) == n})
        if not dynkin_is_lie(part):
            return False
    return True


@dataclass(frozen=True)
class RightNormedCombination:
    """``sum c_i [w_i1, [w_i2, [..., w_in]...]]`` with all words of length ``degree``."""

    alphabet: Alphabet
    terms: Tuple[Tuple[Fraction, Word], ...]
    degree: int

    def __post_init__(self):
        seen = set()
        for c, w in self.terms:
            if not c:
                raise ValueError("zero coefficient in right-normed combination")
            if len(w) != self.degree:
                raise ValueError(f"word {w!r} does not have length {self.degree}")
            if w in seen:
                raise ValueError(f"duplicate word {w!r}")
            seen.add(w)
        ordered = tuple(sorted(self.terms, key=lambda t: t[1]))
        object.__setattr__(self, "terms", ordered)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for c, w in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            br = bracket_string(self.alphabet, w)
            out.append((sign, br if mag == 1 else f"{mag}*{br}"))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def bracket_string(alphabet: Alphabet, word: Word) -> str:
    """``(0, 0, 1)`` over ``A, B`` renders as ``[A,[A,B]]``."""
    names = [alphabet.letters[i] for i in word]
    text = names[-1]
    for name in reversed(names[:-1]):
        text = f"[{name},{text}]"
    return text


def rightnormed_form(p: NcPoly) -> RightNormedCombination:
    """Write a homogeneous Lie polynomial as ``(1/n) sum (P, w) r(w)``.

    One term per support word; right-normed words span but are not a basis,
    so this is a representation, not a canonical one.
    """
    n = _homogeneous_degree(p)
    if not dynkin_is_lie(p):
        raise NotLieError(f"degree-{n} input is not a Lie polynomial: {p}")
    return RightNormedCombination(
        p.alphabet, tuple((c / n, w) for w, c in p.items()), n
    )


def expand_rightnormed(r: RightNormedCombination) -> NcPoly:
    alph = r.alphabet
    return linear_combination(alph, ((c, _bracket_word(alph, w)) for c, w in r.terms))


# executable lemma checks


def check_baker_identity(p: NcPoly, q: NcPoly) -> bool:
    """r(r(P) Q) == [r(P), r(Q)] for constant-free P, Q."""
    rp = rmap(p)
    return rmap(poly_mul(rp, q)) == commutator(rp, rmap(q))


def check_derivation(p1: NcPoly, p2: NcPoly) -> bool:
    """r([P1, P2]) == [P1, r(P2)] + [r(P1), P2] for Lie P1, P2."""
    lhs = rmap(commutator(p1, p2))
    rhs = commutator(p1, rmap(p2)) + commutator(rmap(p1), p2)
    return lhs == rhs


def _letter_poly(alphabet: Alphabet, a) -> NcPoly:
    idx = alphabet.index(a) if isinstance(a, str) else a
    return NcPoly._trusted(alphabet, {(idx,): Fraction(1)})


def check_rPa(p: NcPoly, a) -> bool:
    """r(P a) == -ad_a(P) for a Lie polynomial P and a letter a."""
    x = _letter_poly(p.alphabet, a)
    return rmap(poly_mul(p, x)) == -ad(x, p)


def check_ad_injectivity(p: NcPoly, a) -> bool:
    """If P has no pure powers of ``a``, then ad_a(P) == 0 forces P == 0."""
    if pure_power_coefficients(p, a):
        raise ValueError("precondition violated: input contains pure powers of the letter")
    image = ad(_letter_poly(p.alphabet, a), p)
    return p.is_zero() or not image.is_zero()
