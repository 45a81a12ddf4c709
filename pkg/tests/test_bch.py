import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bchkit.algebra import NcPoly, ad_pow, commutator
from bchkit.bch import (
    BchResult,
    InversionError,
    bch_direct_result,
    bch_recurrence,
    certify,
    invert_ad,
    invert_ad_b,
    recurrence_rhs,
)
from bchkit.lie import expand_rightnormed
from bchkit.sampling import random_without_pure_powers
from conftest import AB, ABC, poly

HALF = Fraction(1, 2)


def swap_letters(p):
    return NcPoly(AB, {tuple(1 - i for i in w): c for w, c in p.items()})


def test_rhs_degree_two(A, B):
    c1 = A + B
    want = HALF * commutator(c1, commutator(c1, B)) - HALF * ad_pow(A, 2, B)
    assert recurrence_rhs(2, [c1]) == want


def test_rhs_matches_direct(direct8, B):
    for n in range(2, 9):
        rhs = recurrence_rhs(n, direct8[: n - 1])
        assert rhs == commutator(B, direct8[n - 1])
        assert rhs.degrees() == {n + 1}


def test_rhs_input_errors(A, B):
    with pytest.raises(ValueError):
        recurrence_rhs(1, [A + B])
    with pytest.raises(ValueError):
        recurrence_rhs(3, [A + B])
    with pytest.raises(ValueError):
        recurrence_rhs(3, [A + B, A])


def test_invert_examples(A, B):
    assert invert_ad_b(poly(AB, {"BA": 1, "AB": -1}), 1) == A
    x = invert_ad_b(recurrence_rhs(2, [A + B]), 2)
    assert x == poly(AB, {"AB": HALF, "BA": -HALF})


def test_invert_rejects_non_image(B):
    with pytest.raises(InversionError):
        invert_ad_b(poly(AB, {"AB": 1}), 1)
    with pytest.raises(InversionError):
        invert_ad_b(poly(AB, {"BB": 1}), 1)
    with pytest.raises(ValueError):
        invert_ad_b(poly(AB, {"ABA": 1}), 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 6), st.sampled_from([AB, ABC]))
def test_invert_roundtrip(seed, n, alph):
    rng = random.Random(seed)
    a = rng.randrange(len(alph))
    p = random_without_pure_powers(rng, alph, a, n, terms=6)
    x = NcPoly.letter(alph, alph.letters[a])
    assert invert_ad(a, commutator(x, p), n) == p
    if alph is AB and a == 1:
        assert invert_ad_b(commutator(x, p), n) == p


def test_recurrence_initial_and_second():
    r = bch_recurrence(1)
    assert r.components == (poly(AB, {"A": 1, "B": 1}),)
    r = bch_recurrence(2)
    assert r.component(2) == poly(AB, {"AB": HALF, "BA": -HALF})
    rn = r.rightnormed[1]
    assert rn.terms == ((Fraction(1, 4), (0, 1)), (Fraction(-1, 4), (1, 0)))
    assert expand_rightnormed(rn) == poly(AB, {"AB": HALF, "BA": -HALF})


def test_recurrence_equals_direct(recurrence8, direct8):
    assert list(recurrence8.components) == direct8
    assert recurrence8.method == "recurrence"


def test_degree_three_closed_form(recurrence8, A, B):
    twelfth = Fraction(1, 12)
    want = twelfth * commutator(A, commutator(A, B)) + twelfth * commutator(B, commutator(B, A))
    assert recurrence8.component(3) == want


def test_swap_symmetry(direct8):
    # C_n(B, A) = (-1)^(n+1) C_n(A, B)
    for n, c in enumerate(direct8[:6], start=1):
        assert swap_letters(c) == (-1) ** (n + 1) * c


def test_certify_both_methods():
    for result in (bch_recurrence(5), bch_direct_result(5)):
        cert = certify(result)
        assert cert.ok, cert.lines()
        assert {e.check for e in cert.entries} == {"homogeneous", "no_pure_powers", "dynkin", "recurrence"}


def test_certify_catches_perturbation(recurrence8, A, B):
    comps = list(recurrence8.components[:5])
    comps[1] = comps[1] + A * B
    cert = certify(comps)
    assert not cert.ok
    assert not cert.passed("dynkin", 2)
    assert not cert.passed("recurrence", 2)


def test_certify_reports_non_homogeneous(recurrence8, A):
    comps = list(recurrence8.components[:3])
    comps[2] = comps[2] + A
    cert = certify(comps)
    assert not cert.passed("homogeneous", 3)
    assert not cert.passed("dynkin", 3)
    assert not cert.passed("recurrence", 3)


def test_bch_result_indexing(recurrence8):
    assert recurrence8.degree == 8
    with pytest.raises(IndexError):
        recurrence8.component(0)
    with pytest.raises(ValueError):
        bch_recurrence(0)
    assert isinstance(bch_direct_result(2), BchResult)
