"""Request and response schemas for the HTTP service.

Every response carries ``schema: 1``.  Field names match the JSON wire
format; the congruence entries expose ``lambda`` through an alias since
it is a Python keyword.
"""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..polynomials import IntPolynomial
from ..reports import ObstructionReport
from ..sunits import BoundValue, SUnitElement, SUnitSolution

SCHEMA_VERSION = 1


class Theorem1Request(BaseModel):
    poly: str
    prime: int


class Theorem1Response(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    verdict: str
    model_config = ConfigDict(populate_by_name=True)


class CheckRequest(BaseModel):
    table_csv: str
    prime: int
    lambda_max: Optional[int] = None
    kbar_csv: Optional[str] = None


class MurasugiHitModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)
    kbar: str
    kbar_coeffs: str
    lam: int = Field(alias="lambda")
    sign: int
    shift: int


class ObstructionReportModel(BaseModel):
    knot: str
    prime: int
    delta: str
    theorem1: dict[str, str]
    murasugi: list[MurasugiHitModel]
    degree_check: bool
    divisibility_note: Optional[str]
    timing_ms: float

    @classmethod
    def from_report(cls, report: ObstructionReport) -> "ObstructionReportModel":
        return cls(
            knot=report.knot,
            prime=report.prime,
            delta=report.delta.render(),
            theorem1={"verdict": report.theorem1.value},
            murasugi=[
                MurasugiHitModel(
                    kbar=hit.kbar,
                    kbar_coeffs=hit.kbar_delta.render(),
                    lam=hit.lam,
                    sign=hit.witness.sign,
                    shift=hit.witness.shift,
                )
                for hit in report.murasugi
            ],
            degree_check=report.degree_check,
            divisibility_note=report.divisibility_note,
            timing_ms=report.timing_ms,
        )


class CheckResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    reports: list[ObstructionReportModel]
    model_config = ConfigDict(populate_by_name=True)


class ScanUnitsRequest(BaseModel):
    prime: int
    height: int
    jobs: int = 1


class ScanUnitsResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    prime: int
    height: int
    polynomials: list[str]
    count: int
    matches_alternating: bool
    model_config = ConfigDict(populate_by_name=True)


class BoundModel(BaseModel):
    base: int
    exponent: int
    digits: int

    @classmethod
    def from_bound(cls, bound: BoundValue) -> "BoundModel":
        return cls(base=bound.base, exponent=bound.exponent, digits=bound.digits())


class SUnitElementModel(BaseModel):
    numerator: list[int]
    denominator: int
    numerator_norm: int
    denominator_norm: int

    @classmethod
    def from_element(cls, element: SUnitElement) -> "SUnitElementModel":
        return cls(
            numerator=list(element.numerator.coords),
            denominator=element.denominator,
            numerator_norm=element.norm_numerator(),
            denominator_norm=element.norm_denominator(),
        )


class SUnitSolutionModel(BaseModel):
    x: SUnitElementModel
    y: SUnitElementModel

    @classmethod
    def from_solution(cls, sol: SUnitSolution) -> "SUnitSolutionModel":
        return cls(
            x=SUnitElementModel.from_element(sol.x),
            y=SUnitElementModel.from_element(sol.y),
        )


class SolveSUnitRequest(BaseModel):
    prime: int
    s: list[int] = []
    height: int = 1
    denom_bound: int = 1
    jobs: int = 1


class SolveSUnitResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    solutions: list[SUnitSolutionModel]
    count: int
    bound: BoundModel
    within_bound: bool
    model_config = ConfigDict(populate_by_name=True)


class EnumerateRequest(BaseModel):
    prime: int
    s: list[int] = []
    gh_height: int = 1
    max_multiplicity: Optional[int] = None
    jobs: int = 1


class EnumerateResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    candidates: list[str]
    count: int
    bound: BoundModel
    within_bound: bool
    model_config = ConfigDict(populate_by_name=True)


class BoundRequest(BaseModel):
    prime: int
    s: list[int] = []


class BoundResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    base: int
    exponent: int
    digits: int
    model_config = ConfigDict(populate_by_name=True)


class VerifyReportRequest(BaseModel):
    document: dict[str, Any]


class VerifyReportResponse(BaseModel):
    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    valid: bool
    failures: list[str]
    model_config = ConfigDict(populate_by_name=True)


def render_sorted(polys: list[IntPolynomial] | set[IntPolynomial]) -> list[str]:
    """Canonical string list for a polynomial set: sort by degree, then coefficients."""
    ordered = sorted(polys, key=lambda f: (len(f.coeffs), f.coeffs))
    return [f.render() for f in ordered]
