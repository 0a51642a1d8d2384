"""Knot table ingest and batch obstruction reports.

Tables are CSV with header ``name,coeffs``; the coeffs column holds the
comma-separated ascending coefficient list (quoted).  Reports embed every
input needed to re-verify them, so a stored report can be re-checked
without the original table.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .obstructions import (
    MurasugiInstance,
    MurasugiWitness,
    Verdict,
    murasugi_search,
    murasugi_witness_holds,
    theorem1_check,
)
from .polynomials import IntPolynomial, divides, is_odd_prime

SCHEMA_VERSION = 1


@dataclass(frozen=True, init=False)
class KnotRecord:
    """Named Alexander polynomial, stored normalized."""

    name: str
    delta: IntPolynomial

    def __init__(self, name: str, delta: IntPolynomial):
        if not name:
            raise ValueError("empty knot name")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "delta", delta.normalized())


def ingest_text(text: str) -> list[KnotRecord]:
    """Parse a knot table; errors carry the offending line number."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ValueError("line 1: missing header 'name,coeffs'") from None
    if [h.strip() for h in header] != ["name", "coeffs"]:
        raise ValueError("line 1: header must be exactly 'name,coeffs'")
    records: list[KnotRecord] = []
    seen: set[str] = set()
    for row in reader:
        line = reader.line_num
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2:
            raise ValueError(f"line {line}: expected 2 fields, got {len(row)}")
        name = row[0].strip()
        if name in seen:
            raise ValueError(f"line {line}: duplicate knot name {name!r}")
        try:
            record = KnotRecord(name, IntPolynomial.parse(row[1]))
        except ValueError as exc:
            raise ValueError(f"line {line}: {exc}") from None
        seen.add(name)
        records.append(record)
    return records


def ingest(path: str | Path) -> list[KnotRecord]:
    return ingest_text(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class MurasugiHit:
    """One congruence witness against a named quotient candidate."""

    kbar: str
    kbar_delta: IntPolynomial
    lam: int
    witness: MurasugiWitness


@dataclass(frozen=True)
class ObstructionReport:
    knot: str
    prime: int
    delta: IntPolynomial
    theorem1: Verdict
    murasugi: tuple[MurasugiHit, ...]
    degree_check: bool
    divisibility_note: Optional[str]
    timing_ms: float


def degree_obstruction_holds(delta: IntPolynomial, p: int) -> bool:
    """Degree consequence: unless p divides the leading coefficient, a
    p-periodic polynomial has degree at least p-1."""
    if delta.leading_coefficient % p == 0:
        return True
    return delta.degree >= p - 1


def run_checks(
    records: Sequence[KnotRecord],
    p: int,
    lam_max: Optional[int] = None,
    kbar_records: Optional[Sequence[KnotRecord]] = None,
) -> list[ObstructionReport]:
    """Full obstruction pass over a table, in input order.

    Quotient candidates are the constant 1 plus any user-supplied list;
    candidates whose polynomial does not divide the knot polynomial are
    skipped and named in the divisibility note rather than searched.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if lam_max is None:
        lam_max = 2 * p
    if lam_max < 1:
        raise ValueError("lambda bound must be at least 1")
    candidates = [KnotRecord("1", IntPolynomial((1,)))]
    candidates.extend(kbar_records or [])
    reports = []
    for record in records:
        start = time.perf_counter()
        verdict = theorem1_check(record.delta, p)
        hits: list[MurasugiHit] = []
        skipped: list[str] = []
        for cand in candidates:
            if not divides(cand.delta, record.delta):
                skipped.append(cand.name)
                continue
            for lam, witness in murasugi_search(record.delta, cand.delta, p, lam_max):
                hits.append(MurasugiHit(cand.name, cand.delta, lam, witness))
        note = f"skipped non-divisor quotient candidates: {', '.join(skipped)}" if skipped else None
        elapsed = (time.perf_counter() - start) * 1000.0
        reports.append(
            ObstructionReport(
                knot=record.name,
                prime=p,
                delta=record.delta,
                theorem1=verdict,
                murasugi=tuple(hits),
                degree_check=degree_obstruction_holds(record.delta, p),
                divisibility_note=note,
                timing_ms=elapsed,
            )
        )
    return reports


def report_to_json(report: ObstructionReport) -> dict:
    return {
        "knot": report.knot,
        "prime": report.prime,
        "delta": report.delta.render(),
        "theorem1": {"verdict": report.theorem1.value},
        "murasugi": [
            {
                "kbar": hit.kbar,
                "kbar_coeffs": hit.kbar_delta.render(),
                "lambda": hit.lam,
                "sign": hit.witness.sign,
                "shift": hit.witness.shift,
            }
            for hit in report.murasugi
        ],
        "degree_check": report.degree_check,
        "divisibility_note": report.divisibility_note,
        "timing_ms": report.timing_ms,
    }


def check_document(reports: Sequence[ObstructionReport]) -> dict:
    return {"schema": SCHEMA_VERSION, "reports": [report_to_json(r) for r in reports]}


def verify_report(document: dict) -> list[str]:
    """Re-verify a check document; returns human-readable failures.

    Theorem-1 verdicts and the degree check are recomputed from the
    embedded polynomial; every congruence witness is re-substituted
    exactly.  An empty list means the document is internally consistent.
    """
    failures: list[str] = []
    if document.get("schema") != SCHEMA_VERSION:
        return [f"unsupported schema {document.get('schema')!r}"]
    reports = document.get("reports")
    if not isinstance(reports, list):
        return ["missing reports list"]
    for entry in reports:
        name = entry.get("knot", "<unnamed>")
        try:
            p = int(entry["prime"])
            delta = IntPolynomial.parse(entry["delta"])
            stated = Verdict(entry["theorem1"]["verdict"])
            if theorem1_check(delta, p) is not stated:
                failures.append(f"{name}: theorem1 verdict does not recompute")
            if bool(entry["degree_check"]) != degree_obstruction_holds(delta, p):
                failures.append(f"{name}: degree check does not recompute")
            for hit in entry["murasugi"]:
                inst = MurasugiInstance(
                    delta, IntPolynomial.parse(hit["kbar_coeffs"]), int(hit["lambda"]), p
                )
                witness = MurasugiWitness(int(hit["sign"]), int(hit["shift"]))
                if not murasugi_witness_holds(inst, witness):
                    failures.append(
                        f"{name}: congruence witness for {hit['kbar']!r} "
                        f"at lambda={hit['lambda']} does not re-substitute"
                    )
        except (KeyError, TypeError, ValueError) as exc:
            failures.append(f"{name}: malformed report entry ({exc})")
    return failures
