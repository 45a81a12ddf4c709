"""Sparse exact arithmetic in the free associative algebra Q<A>.

Words are tuples of letter indices into an :class:`Alphabet`; a polynomial
is a map ``word -> Fraction`` with no zero values stored.  Everything is
immutable once built, so values may be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

Word = Tuple[int, ...]
Coefficient = Union[int, Fraction]

EMPTY_WORD: Word = ()


class AlphabetMismatchError(ValueError):
    """Raised when two operands live over different alphabets."""


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of letter names; the order fixes the monomial order."""

    letters: Tuple[str, ...]

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if len(letters) < 2:
            raise ValueError("an alphabet needs at least two letters")
        if len(set(letters)) != len(letters):
            raise ValueError(f"duplicate letter names in {letters!r}")
        if any(not isinstance(x, str) or not x for x in letters):
            raise ValueError("letter names must be non-empty strings")

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, name: str) -> int:
        try:
            return self.letters.index(name)
        except ValueError:
            raise KeyError(f"letter {name!r} not in alphabet {self.letters!r}") from None

    def parse_word(self, spelling: Union[str, Sequence[str]]) -> Word:
        """Turn ``"ABA"`` (single-character names) or ``["x1", "x2"]`` into a word."""
        if isinstance(spelling, str):
            if all(len(x) == 1 for x in self.letters):
                return tuple(self.index(ch) for ch in spelling)
            if spelling in self.letters:
                return (self.index(spelling),)
            raise ValueError(
                f"cannot split {spelling!r}: alphabet has multi-character letters; "
                "pass a sequence of names instead"
            )
        return tuple(self.index(name) for name in spelling)

    def render_word(self, word: Word) -> str:
        if not word:
            return "1"
        sep = "" if all(len(x) == 1 for x in self.letters) else "*"
        return sep.join(self.letters[i] for i in word)


BCH_ALPHABET = Alphabet(("A", "B"))


def word_order_key(word: Word):
    """Degree-lexicographic key; letter order is the alphabet order."""
    return (len(word), word)


def _as_coefficient(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class NcPoly:
    """Element of Q<A>: a finitely supported map from words to rationals.

    The zero polynomial is the empty map.  Iteration (``items``) follows the
    degree-lexicographic order regardless of insertion order.
    """

    __slots__ = ("_alphabet", "_terms", "_hash")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, Coefficient] = None):
        clean = {}
        if terms:
            n = len(alphabet)
            for word, c in terms.items():
                word = tuple(word)
                if any(not 0 <= i < n for i in word):
                    raise ValueError(f"word {word!r} uses letters outside the alphabet")
                c = _as_coefficient(c)
                if c:
                    clean[word] = c
        self._alphabet = alphabet
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, alphabet: Alphabet, terms: dict) -> "NcPoly":
        # terms already normalized (Fraction values, no zeros); no copy
        self = cls.__new__(cls)
        self._alphabet = alphabet
        self._terms = terms
        self._hash = None
        return self

    # construction helpers

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls._trusted(alphabet, {})

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPoly":
        return cls._trusted(alphabet, {EMPTY_WORD: Fraction(1)})

    @classmethod
    def letter(cls, alphabet: Alphabet, name: str) -> "NcPoly":
        return cls._trusted(alphabet, {(alphabet.index(name),): Fraction(1)})

    @classmethod
    def monomial(cls, alphabet: Alphabet, word, coeff: Coefficient = 1) -> "NcPoly":
        if not isinstance(word, tuple) or (word and not isinstance(word[0], int)):
            word = alphabet.parse_word(word)
        return cls(alphabet, {word: coeff})

    @classmethod
    def from_spellings(cls, alphabet: Alphabet, terms: Mapping[str, Coefficient]) -> "NcPoly":
        """``NcPoly.from_spellings(ab, {"AB": 1, "BA": -1})``; the key ``"1"`` is the empty word."""
        out = {}
        for spelling, c in terms.items():
            word = EMPTY_WORD if spelling == "1" else alphabet.parse_word(spelling)
            out[word] = out.get(word, 0) + _as_coefficient(c)
        return cls(alphabet, out)

    # read access

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        for word in sorted(self._terms, key=word_order_key):
            yield word, self._terms[word]

    def support(self) -> list:
        return sorted(self._terms, key=word_order_key)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, word) -> Fraction:
        if isinstance(word, str):
            word = EMPTY_WORD if word == "1" else self._alphabet.parse_word(word)
        return self._terms.get(tuple(word), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(EMPTY_WORD, Fraction(0))

    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    def degree(self) -> int:
        """Largest word length present.  Undefined for zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(len(w) for w in self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(len(w) for w in self._terms)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) == 1

    def max_denominator(self) -> int:
        return max((c.denominator for c in self._terms.values()), default=1)

    # arithmetic

    def _check(self, other: "NcPoly"):
        if not isinstance(other, NcPoly):
            raise TypeError(f"expected NcPoly, got {type(other).__name__}")
        if other._alphabet != self._alphabet:
            raise AlphabetMismatchError(
                f"alphabets differ: {self._alphabet.letters} vs {other._alphabet.letters}"
            )

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return poly_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return poly_sub(self, other)

    def __neg__(self):
        return NcPoly._trusted(self._alphabet, {w: -c for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return poly_mul(self, other)
        if isinstance(other, (int, Rational)):
            return poly_scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return poly_scale(other, self)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return poly_scale(Fraction(1) / _as_coefficient(other), self)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self._alphabet == other._alphabet and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._alphabet, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"NcPoly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for word, c in self.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            name = self._alphabet.render_word(word)
            if not word:
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}*{name}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _same_alphabet(p: NcPoly, q: NcPoly):
    p._check(q)


def poly_add(p: NcPoly, q: NcPoly) -> NcPoly:
    _same_alphabet(p, q)
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out = dict(p._terms)
    for w, c in q._terms.items():
        s = out.get(w, 0) + c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return NcPoly._trusted(p._alphabet, out)


def poly_sub(p: NcPoly, q: NcPoly) -> NcPoly:
    _same_alphabet(p, q)
    out = dict(p._terms)
    for w, c in q._terms.items():
        s = out.get(w, 0) - c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return NcPoly._trusted(p._alphabet, out)


def poly_scale(c: Coefficient, p: NcPoly) -> NcPoly:
    c = _as_coefficient(c)
    if not c:
        return NcPoly.zero(p.alphabet)
    return NcPoly._trusted(p._alphabet, {w: c * v for w, v in p._terms.items()})


def linear_combination(alphabet: Alphabet, pairs: Iterable[Tuple[Coefficient, NcPoly]]) -> NcPoly:
    """Sum of ``c * P`` over ``pairs`` with a single accumulator."""
    out = {}
    for c, p in pairs:
        if p._alphabet != alphabet:
            raise AlphabetMismatchError("operand over a different alphabet")
        c = _as_coefficient(c)
        if not c:
            continue
        for w, v in p._terms.items():
            out[w] = out.get(w, 0) + c * v
    return NcPoly._trusted(alphabet, {w: v for w, v in out.items() if v})


def poly_mul(p: NcPoly, q: NcPoly, max_degree: int = None) -> NcPoly:
    """Noncommutative product.  Words longer than ``max_degree`` are skipped."""
    _same_alphabet(p, q)
    out = {}
    qt = q._terms
    for w1, c1 in p._terms.items():
        budget = None if max_degree is None else max_degree - len(w1)
        if budget is not None and budget < 0:
            continue
        for w2, c2 in qt.items():
            if budget is not None and len(w2) > budget:
                continue
            w = w1 + w2
            out[w] = out.get(w, 0) + c1 * c2
    return NcPoly._trusted(p._alphabet, {w: v for w, v in out.items() if v})


def left_mul(x: NcPoly, z: NcPoly) -> NcPoly:
    """L_X(Z) = XZ."""
    return poly_mul(x, z)


def right_mul(x: NcPoly, z: NcPoly) -> NcPoly:
    """R_X(Z) = ZX."""
    return poly_mul(z, x)


def commutator(p: NcPoly, q: NcPoly) -> NcPoly:
    _same_alphabet(p, q)
    out = {}
    for w1, c1 in p._terms.items():
        for w2, c2 in q._terms.items():
            c = c1 * c2
            a = w1 + w2
            b = w2 + w1
            if a == b:
                continue
            out[a] = out.get(a, 0) + c
            out[b] = out.get(b, 0) - c
    return NcPoly._trusted(p._alphabet, {w: v for w, v in out.items() if v})


def ad(x: NcPoly, y: NcPoly) -> NcPoly:
    """ad_X(Y) = [X, Y]."""
    return commutator(x, y)


def ad_pow(x: NcPoly, n: int, y: NcPoly) -> NcPoly:
    """ad_X applied ``n`` times to ``Y``."""
    if n < 0:
        raise ValueError("ad_pow needs n >= 0")
    out = y
    for _ in range(n):
        out = commutator(x, out)
    return out


def coefficient(p: NcPoly, word) -> Fraction:
    return p.coefficient(word)


def homogeneous_component(p: NcPoly, n: int) -> NcPoly:
    if n < 0:
        raise ValueError("degree must be >= 0")
    return NcPoly._trusted(p._alphabet, {w: c for w, c in p._terms.items() if len(w) == n})


def truncate(p: NcPoly, order: int) -> NcPoly:
    """Drop every word longer than ``order``."""
    if all(len(w) <= order for w in p._terms):
        return p
    return NcPoly._trusted(p._alphabet, {w: c for w, c in p._terms.items() if len(w) <= order})


def pure_power_coefficients(p: NcPoly, letter) -> list:
    """Nonzero coefficients on ``a**k`` (k >= 0) as ``[(k, coeff), ...]``, k ascending.

    An empty list means ``p`` satisfies the no-pure-power side condition for
    the injectivity of ``ad_a``.
    """
    a = p.alphabet.index(letter) if isinstance(letter, str) else letter
    found = [
        (len(w), c) for w, c in p._terms.items() if all(i == a for i in w)
    ]
    return sorted(found)
