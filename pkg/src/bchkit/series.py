"""Truncated formal power series over Q<A> and the direct BCH expansion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    BCH_ALPHABET,
    NcPoly,
    ad_pow,
    homogeneous_component,
    linear_combination,
    poly_add,
    poly_mul,
    poly_scale,
    truncate,
)


@dataclass(frozen=True)
class TruncatedSeries:
    """A power series known up to (and including) degree ``order``.

    Terms above ``order`` are discarded on construction.
    """

    body: NcPoly
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        object.__setattr__(self, "body", truncate(self.body, self.order))

    @property
    def alphabet(self):
        return self.body.alphabet

    @classmethod
    def one(cls, alphabet, order: int) -> "TruncatedSeries":
        return cls(NcPoly.one(alphabet), order)

    def constant_term(self) -> Fraction:
        return self.body.constant_term()

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(poly_add(self.body, other.body), min(self.order, other.order))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries(self.body - other.body, min(self.order, other.order))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self.body, self.order)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ts_mul(self, other)
        return TruncatedSeries(poly_scale(other, self.body), self.order)

    __rmul__ = __mul__


def ts_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    order = min(s.order, t.order)
    return TruncatedSeries(poly_mul(s.body, t.body, max_degree=order), order)


def _require_constant_free(x: NcPoly, what: str):
    if x.constant_term():
        raise ValueError(f"{what} needs a series without constant term, got {x.constant_term()}")


def ts_exp(x: TruncatedSeries) -> TruncatedSeries:
    """sum_{k=0}^{order} X^k / k!  (X must have no constant term)."""
    _require_constant_free(x.body, "exp")
    order = x.order
    one = NcPoly.one(x.alphabet)
    # Horner: 1 + X(1 + X/2(1 + X/3(...)))
    acc = one
    for k in range(order, 0, -1):
        acc = poly_add(one, poly_scale(Fraction(1, k), poly_mul(x.body, acc, max_degree=order)))
    return TruncatedSeries(acc, order)


def ts_log(s: TruncatedSeries) -> TruncatedSeries:
    """log(S) = sum_{k>=1} (-1)^(k+1)/k (S-1)^k; S must have constant term 1."""
    if s.constant_term() != 1:
        raise ValueError(f"log needs constant term 1, got {s.constant_term()}")
    order = s.order
    alph = s.alphabet
    y = s.body - NcPoly.one(alph)
    if order == 0:
        return TruncatedSeries(NcPoly.zero(alph), 0)
    # Horner: Y(c_1 + Y(c_2 + ... + Y c_order)), c_k = (-1)^(k+1)/k
    acc = NcPoly.zero(alph)
    for k in range(order, 0, -1):
        acc = poly_add(NcPoly.one(alph) * Fraction((-1) ** (k + 1), k), acc)
        acc = poly_mul(y, acc, max_degree=order)
    return TruncatedSeries(acc, order)


def bch_direct(n: int) -> list:
    """Components C_1..C_n of log(e^A e^B); ``result[k-1]`` is C_k."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    a = TruncatedSeries(NcPoly.letter(BCH_ALPHABET, "A"), n)
    b = TruncatedSeries(NcPoly.letter(BCH_ALPHABET, "B"), n)
    c = ts_log(ts_mul(ts_exp(a), ts_exp(b))).body
    return [homogeneous_component(c, k) for k in range(1, n + 1)]


def exp_ad_sum(x: NcPoly, y: NcPoly, order: int) -> NcPoly:
    """sum_{k=0}^{order} ad_X^k(Y) / k!, truncated at ``order``."""
    terms = []
    cur = y
    fact = 1
    for k in range(order + 1):
        if k:
            fact *= k
            cur = truncate(ad_pow(x, 1, cur), order)
        if cur.is_zero():
            break
        terms.append((Fraction(1, fact), cur))
    return truncate(linear_combination(x.alphabet, terms), order)


def check_exp_ad_identity(x: NcPoly, y: NcPoly, order: int) -> bool:
    """Compare e^X Y e^{-X} with e^{ad_X}(Y) modulo degree > ``order``."""
    _require_constant_free(x, "exp")
    _require_constant_free(y, "the exp-ad identity")
    ex = ts_exp(TruncatedSeries(x, order))
    emx = ts_exp(TruncatedSeries(-x, order))
    lhs = ts_mul(ts_mul(ex, TruncatedSeries(y, order)), emx).body
    return lhs == exp_ad_sum(x, y, order)
