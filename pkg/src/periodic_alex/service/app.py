"""FastAPI service over the obstruction library.

The handler functions are plain callables taking request models and
returning response models; the CLI invokes them in-process by default,
and the HTTP routes are thin wrappers that translate domain ValueErrors
into 422 responses.  The service never touches the local filesystem:
tables arrive as CSV text inside the request body.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..obstructions import scan_units, theorem1_check
from ..polynomials import IntPolynomial, alternating_polynomial
from ..reports import check_document, ingest_text, run_checks, verify_report
from ..sunits import (
    SUnitContext,
    enumerate_candidates,
    solve_sunit_equation,
    theorem2_bound,
)
from .models import (
    BoundModel,
    BoundRequest,
    BoundResponse,
    CheckRequest,
    CheckResponse,
    EnumerateRequest,
    EnumerateResponse,
    ObstructionReportModel,
    ScanUnitsRequest,
    ScanUnitsResponse,
    SolveSUnitRequest,
    SolveSUnitResponse,
    SUnitSolutionModel,
    Theorem1Request,
    Theorem1Response,
    VerifyReportRequest,
    VerifyReportResponse,
    render_sorted,
)


def handle_theorem1(req: Theorem1Request) -> Theorem1Response:
    verdict = theorem1_check(IntPolynomial.parse(req.poly), req.prime)
    return Theorem1Response(verdict=verdict.value)


def handle_check(req: CheckRequest) -> CheckResponse:
    records = ingest_text(req.table_csv)
    kbar = ingest_text(req.kbar_csv) if req.kbar_csv else None
    reports = run_checks(records, req.prime, lam_max=req.lambda_max, kbar_records=kbar)
    return CheckResponse(reports=[ObstructionReportModel.from_report(r) for r in reports])


def handle_scan_units(req: ScanUnitsRequest) -> ScanUnitsResponse:
    found = scan_units(req.prime, req.height, jobs=req.jobs)
    target = {alternating_polynomial(req.prime)}
    return ScanUnitsResponse(
        prime=req.prime,
        height=req.height,
        polynomials=render_sorted(found),
        count=len(found),
        matches_alternating=found == target,
    )


def handle_solve_sunit(req: SolveSUnitRequest) -> SolveSUnitResponse:
    ctx = SUnitContext(req.prime, req.s, height=req.height, denom_bound=req.denom_bound)
    solutions = solve_sunit_equation(ctx, jobs=req.jobs)
    bound = theorem2_bound(req.prime, req.s)
    return SolveSUnitResponse(
        solutions=[SUnitSolutionModel.from_solution(s) for s in solutions],
        count=len(solutions),
        bound=BoundModel.from_bound(bound),
        within_bound=bound.at_least(len(solutions)),
    )


def handle_enumerate(req: EnumerateRequest) -> EnumerateResponse:
    ctx = SUnitContext(req.prime, req.s)
    candidates = enumerate_candidates(
        ctx, req.gh_height, max_multiplicity=req.max_multiplicity, jobs=req.jobs
    )
    bound = theorem2_bound(req.prime, req.s)
    return EnumerateResponse(
        candidates=[f.render() for f in candidates],
        count=len(candidates),
        bound=BoundModel.from_bound(bound),
        within_bound=bound.at_least(len(candidates)),
    )


def handle_bound(req: BoundRequest) -> BoundResponse:
    bound = theorem2_bound(req.prime, req.s)
    return BoundResponse(base=bound.base, exponent=bound.exponent, digits=bound.digits())


def handle_verify_report(req: VerifyReportRequest) -> VerifyReportResponse:
    failures = verify_report(req.document)
    return VerifyReportResponse(valid=not failures, failures=failures)


def create_app() -> FastAPI:
    app = FastAPI(title="periodic-alex", version=__version__)

    def domain(call):
        try:
            return call()
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/v1/theorem1", response_model=Theorem1Response)
    def theorem1(req: Theorem1Request) -> Theorem1Response:
        return domain(lambda: handle_theorem1(req))

    @app.post("/v1/check", response_model=CheckResponse)
    def check(req: CheckRequest) -> CheckResponse:
        return domain(lambda: handle_check(req))

    @app.post("/v1/scan-units", response_model=ScanUnitsResponse)
    def scan(req: ScanUnitsRequest) -> ScanUnitsResponse:
        return domain(lambda: handle_scan_units(req))

    @app.post("/v1/solve-sunit", response_model=SolveSUnitResponse)
    def solve(req: SolveSUnitRequest) -> SolveSUnitResponse:
        return domain(lambda: handle_solve_sunit(req))

    @app.post("/v1/enumerate", response_model=EnumerateResponse)
    def enumerate_(req: EnumerateRequest) -> EnumerateResponse:
        return domain(lambda: handle_enumerate(req))

    @app.post("/v1/bound", response_model=BoundResponse)
    def bound(req: BoundRequest) -> BoundResponse:
        return domain(lambda: handle_bound(req))

    @app.post("/v1/verify-report", response_model=VerifyReportResponse)
    def verify(req: VerifyReportRequest) -> VerifyReportResponse:
        return domain(lambda: handle_verify_report(req))

    return app


app = create_app()
