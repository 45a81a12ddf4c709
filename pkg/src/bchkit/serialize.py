"""Text, JSON and CSV renderings of BCH tables.

Rationals are always written as separate numerator/denominator integer
strings so nothing is lost on the way out.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .algebra import Alphabet, NcPoly, word_order_key
from .lie import RightNormedCombination, bracket_string

BASES = ("words", "rightnormed")
CSV_HEADER = ("degree", "basis", "term", "numerator", "denominator")


@dataclass(frozen=True)
class OutputRecord:
    degree: int
    basis: str
    entries: Tuple[Tuple[str, str, str], ...]

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "entries": [{"term": t, "num": n, "den": d} for t, n, d in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OutputRecord":
        return cls(
            int(data["degree"]),
            data["basis"],
            tuple((e["term"], e["num"], e["den"]) for e in data["entries"]),
        )


def _entry(term: str, c: Fraction) -> Tuple[str, str, str]:
    return term, str(c.numerator), str(c.denominator)


def poly_entries(p: NcPoly) -> Tuple[Tuple[str, str, str], ...]:
    return tuple(_entry(p.alphabet.render_word(w), c) for w, c in p.items())


def rightnormed_entries(r: RightNormedCombination) -> Tuple[Tuple[str, str, str], ...]:
    ordered = sorted(r.terms, key=lambda t: word_order_key(t[1]))
    return tuple(_entry(bracket_string(r.alphabet, w), c) for c, w in ordered)


def records_for(result, basis: str) -> List[OutputRecord]:
    """One record per degree of a :class:`~bchkit.bch.BchResult`."""
    if basis == "words":
        return [OutputRecord(n, basis, poly_entries(c)) for n, c in enumerate(result.components, 1)]
    if basis == "rightnormed":
        return [
            OutputRecord(n, basis, rightnormed_entries(r)) for n, r in enumerate(result.rightnormed, 1)
        ]
    raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


def to_json(alphabet: Alphabet, method: str, records: List[OutputRecord]) -> str:
    doc = {
        "alphabet": list(alphabet.letters),
        "method": method,
        "components": [r.to_dict() for r in records],
    }
    return json.dumps(doc, indent=2) + "\n"


def from_json(text: str):
    """Inverse of :func:`to_json`: ``(alphabet, method, records)``."""
    doc = json.loads(text)
    return (
        Alphabet(tuple(doc["alphabet"])),
        doc["method"],
        [OutputRecord.from_dict(c) for c in doc["components"]],
    )


def to_csv(records: List[OutputRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        for term, num, den in rec.entries:
            writer.writerow((rec.degree, rec.basis, term, num, den))
    return buf.getvalue()


def _format_term(term: str, num: str, den: str) -> Tuple[str, str]:
    c = Fraction(int(num), int(den))
    mag = abs(c)
    return ("-" if c < 0 else "+"), (term if mag == 1 else f"{mag}*{term}")


def to_text(records: List[OutputRecord]) -> str:
    lines = []
    for rec in records:
        parts = [_format_term(*e) for e in rec.entries]
        if not parts:
            body = "0"
        else:
            body = ("-" if parts[0][0] == "-" else "") + parts[0][1]
            for sign, t in parts[1:]:
                body += f" {sign} {t}"
        lines.append(f"C_{rec.degree} = {body}")
    return "\n".join(lines) + "\n"


def poly_from_entries(alphabet: Alphabet, entries) -> NcPoly:
    """Rebuild a word-basis polynomial from ``(term, num, den)`` triples."""
    terms = {}
    for term, num, den in entries:
        word = () if term == "1" else alphabet.parse_word(term if "*" not in term else term.split("*"))
        terms[word] = Fraction(int(num), int(den))
    return NcPoly(alphabet, terms)


def render(fmt: str, alphabet: Alphabet, method: str, records: List[OutputRecord]) -> str:
    if fmt == "json":
        return to_json(alphabet, method, records)
    if fmt == "csv":
        return to_csv(records)
    if fmt == "text":
        return to_text(records)
    raise ValueError(f"unknown format {fmt!r}")
