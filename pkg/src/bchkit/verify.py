"""Seeded randomized runs of every identity check, plus BCH certification."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from . import bch, lie
from .algebra import Alphabet, NcPoly, ad
from .sampling import (
    random_lie,
    random_poly,
    random_without_pure_powers,
)
from .serialize import poly_entries
from .series import check_exp_ad_identity

ALPHABETS = {
    2: Alphabet(("A", "B")),
    3: Alphabet(("A", "B", "C")),
}

LEMMA_DEGREE = 4
EXP_AD_DEGREE = 2


@dataclass
class SuiteResult:
    name: str
    alphabet_size: int
    trials: int = 0
    passed: int = 0
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def line(self) -> str:
        return f"{self.name} alphabet={self.alphabet_size}: {self.passed}/{self.trials} passed"


@dataclass
class VerifyReport:
    max_degree: int
    trials: int
    seed: int
    suites: List[SuiteResult] = field(default_factory=list)
    certificate: Optional[bch.Certificate] = None
    certify_error: str = ""

    @property
    def ok(self) -> bool:
        cert_ok = self.certificate is not None and self.certificate.ok
        return cert_ok and all(s.ok for s in self.suites)

    def text(self) -> str:
        out = [f"bchkit verify: max_degree={self.max_degree} trials={self.trials} seed={self.seed}"]
        for s in self.suites:
            out.append(s.line())
        for s in self.suites:
            if s.counterexample is not None:
                out.append(f"counterexample {s.name} alphabet={s.alphabet_size}:")
                out.append(json.dumps(s.counterexample, indent=2))
        if self.certificate is not None:
            cert = self.certificate
            good = sum(e.passed for e in cert.entries)
            out.append(f"certify {cert.method} degrees 1..{self.max_degree}: {good}/{len(cert.entries)} checks passed")
            out.extend("  " + line for line in cert.lines() if "FAIL" in line)
        if self.certify_error:
            out.append(f"certify failed: {self.certify_error}")
        out.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(out) + "\n"


def _dump(p: NcPoly) -> list:
    return [{"term": t, "num": n, "den": d} for t, n, d in poly_entries(p)]


# Each trial draws its inputs and returns (passed, inputs-for-report).


def _trial_baker(rng, alph):
    p = random_poly(rng, alph, LEMMA_DEGREE)
    q = random_poly(rng, alph, LEMMA_DEGREE)
    return lie.check_baker_identity(p, q), {"P": p, "Q": q}


def _trial_derivation(rng, alph):
    p1 = random_lie(rng, alph, LEMMA_DEGREE)
    p2 = random_lie(rng, alph, LEMMA_DEGREE)
    return lie.check_derivation(p1, p2), {"P1": p1, "P2": p2}


def _trial_rpa(rng, alph):
    p = random_lie(rng, alph, LEMMA_DEGREE)
    a = rng.choice(alph.letters)
    return lie.check_rPa(p, a), {"P": p, "a": a}


def _trial_injectivity(rng, alph):
    a = rng.randrange(len(alph))
    p = random_without_pure_powers(rng, alph, a, rng.randint(1, LEMMA_DEGREE))
    return lie.check_ad_injectivity(p, a), {"P": p, "a": alph.letters[a]}


def _trial_inversion(rng, alph):
    a = rng.randrange(len(alph))
    n = rng.randint(1, LEMMA_DEGREE)
    p = random_without_pure_powers(rng, alph, a, n)
    x = NcPoly.letter(alph, alph.letters[a])
    return bch.invert_ad(a, ad(x, p), n) == p, {"P": p, "a": alph.letters[a]}


def _trial_exp_ad(rng, alph, order):
    x = random_poly(rng, alph, EXP_AD_DEGREE)
    y = random_poly(rng, alph, EXP_AD_DEGREE)
    return check_exp_ad_identity(x, y, order), {"X": x, "Y": y, "order": order}


def run_suite(name: str, trial: Callable, alphabet_size: int, trials: int, seed: int) -> SuiteResult:
    """Run ``trials`` draws of ``trial``; any exception counts as a failure."""
    rng = random.Random(f"{seed}:{name}:{alphabet_size}")
    alph = ALPHABETS[alphabet_size]
    res = SuiteResult(name, alphabet_size)
    for i in range(trials):
        res.trials += 1
        try:
            ok, inputs = trial(rng, alph)
            err = None
        except Exception as exc:  # a crash is a failed check, reported like one
            ok, inputs, err = False, {}, f"{type(exc).__name__}: {exc}"
        if ok:
            res.passed += 1
        elif res.counterexample is None:
            ce = {"trial": i}
            for k, v in inputs.items():
                ce[k] = _dump(v) if isinstance(v, NcPoly) else v
            if err:
                ce["error"] = err
            res.counterexample = ce
    return res


def suite_table(order: int) -> Dict[str, Callable]:
    return {
        "baker_identity": _trial_baker,
        "derivation": _trial_derivation,
        "rPa": _trial_rpa,
        "ad_injectivity": _trial_injectivity,
        "ad_inversion": _trial_inversion,
        "exp_ad_identity": lambda rng, alph: _trial_exp_ad(rng, alph, order),
    }


def run_verify(max_degree: int = 6, trials: int = 100, seed: int = 42) -> VerifyReport:
    report = VerifyReport(max_degree, trials, seed)
    for name, trial in suite_table(max_degree).items():
        for size in sorted(ALPHABETS):
            report.suites.append(run_suite(name, trial, size, trials, seed))
    try:
        comps = list(bch.iter_recurrence(max_degree))
        report.certificate = bch.certify(comps, method="recurrence")
    except Exception as exc:
        report.certify_error = f"{type(exc).__name__}: {exc}"
    return report
