"""Command-line client for the obstruction service.

Every subcommand builds a typed request and sends it either to the
in-process service handlers (default) or to a running server given with
``--server URL``; the CLI itself only reads local files and prints JSON.

Exit codes: 0 for completed runs (mathematical FAIL verdicts are data,
not errors), 1 for internal invariant violations, 2 for usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

import httpx
from pydantic import BaseModel

from .service import models
from .service.app import (
    handle_bound,
    handle_check,
    handle_enumerate,
    handle_scan_units,
    handle_solve_sunit,
    handle_theorem1,
    handle_verify_report,
)

JOBS_ENV = "PERIODIC_ALEX_JOBS"

_HANDLERS = {
    "theorem1": handle_theorem1,
    "check": handle_check,
    "scan-units": handle_scan_units,
    "solve-sunit": handle_solve_sunit,
    "enumerate": handle_enumerate,
    "bound": handle_bound,
    "verify-report": handle_verify_report,
}

_PATHS = {name: f"/v1/{name}" for name in _HANDLERS}


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part.strip()) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodic-alex",
        description="Periodicity obstructions for Alexander polynomials: "
        "congruence and uniqueness checks, cyclotomic unit scans, S-unit searches.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", metavar="URL", help="send the request to a running service")
    common.add_argument("--out", metavar="FILE", help="write the JSON response to FILE")

    visible = "{check,theorem1,scan-units,solve-sunit,enumerate,bound,serve}"
    sub = parser.add_subparsers(dest="command", metavar=visible, required=True)

    check = sub.add_parser("check", parents=[common], help="run all obstruction checks on a knot table")
    check.add_argument("--table", required=True, help="CSV file with header name,coeffs")
    check.add_argument("--prime", type=int, required=True)
    check.add_argument("--lambda-max", type=int, default=None, dest="lambda_max")
    check.add_argument("--kbar-table", default=None, help="CSV of quotient knot candidates")

    theorem1 = sub.add_parser("theorem1", parents=[common], help="uniqueness gate for one polynomial")
    theorem1.add_argument("--poly", required=True, help="ascending coefficients, e.g. 1,-1,1")
    theorem1.add_argument("--prime", type=int, required=True)

    scan = sub.add_parser("scan-units", parents=[common], help="bounded cyclotomic unit scan")
    scan.add_argument("--prime", type=int, required=True)
    scan.add_argument("--height", type=int, required=True)
    scan.add_argument("--jobs", type=int, default=1)

    solve = sub.add_parser("solve-sunit", parents=[common], help="solve x + y = 1 in S-units")
    solve.add_argument("--prime", type=int, required=True)
    solve.add_argument("--s", type=_int_list, default=[], help="comma-separated primes, may be empty")
    solve.add_argument("--height", type=int, required=True)
    solve.add_argument("--denom-bound", type=int, required=True, dest="denom_bound")
    solve.add_argument("--jobs", type=int, default=1)

    enum = sub.add_parser("enumerate", parents=[common], help="enumerate candidate polynomials")
    enum.add_argument("--prime", type=int, required=True)
    enum.add_argument("--s", type=_int_list, default=[])
    enum.add_argument("--gh-height", type=int, required=True, dest="gh_height")
    enum.add_argument("--max-multiplicity", type=int, default=None, dest="max_multiplicity")
    enum.add_argument("--jobs", type=int, default=1)

    bound = sub.add_parser("bound", parents=[common], help="finiteness bound for (p, S)")
    bound.add_argument("--prime", type=int, required=True)
    bound.add_argument("--s", type=_int_list, default=[])

    verify = sub.add_parser("verify-report", parents=[common])
    verify.add_argument("--in", dest="infile", default=None, help="report JSON (default: stdin)")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


def _jobs(args: argparse.Namespace) -> int:
    env = os.environ.get(JOBS_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{JOBS_ENV} must be an integer, got {env!r}") from None
    return args.jobs


def _build_request(args: argparse.Namespace) -> BaseModel:
    if args.command == "theorem1":
        return models.Theorem1Request(poly=args.poly, prime=args.prime)
    if args.command == "check":
        table = Path(args.table).read_text(encoding="utf-8")
        kbar = Path(args.kbar_table).read_text(encoding="utf-8") if args.kbar_table else None
        return models.CheckRequest(
            table_csv=table, prime=args.prime, lambda_max=args.lambda_max, kbar_csv=kbar
        )
    if args.command == "scan-units":
        return models.ScanUnitsRequest(prime=args.prime, height=args.height, jobs=_jobs(args))
    if args.command == "solve-sunit":
        return models.SolveSUnitRequest(
            prime=args.prime,
            s=args.s,
            height=args.height,
            denom_bound=args.denom_bound,
            jobs=_jobs(args),
        )
    if args.command == "enumerate":
        return models.EnumerateRequest(
            prime=args.prime,
            s=args.s,
            gh_height=args.gh_height,
            max_multiplicity=args.max_multiplicity,
            jobs=_jobs(args),
        )
    if args.command == "bound":
        return models.BoundRequest(prime=args.prime, s=args.s)
    if args.command == "verify-report":
        text = Path(args.infile).read_text(encoding="utf-8") if args.infile else sys.stdin.read()
        try:
            document = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"report is not valid JSON: {exc}") from None
        return models.VerifyReportRequest(document=document)
    raise ValueError(f"unknown command {args.command!r}")


def _dispatch(args: argparse.Namespace, request: BaseModel) -> dict:
    if args.server:
        url = args.server.rstrip("/") + _PATHS[args.command]
        response = httpx.post(url, json=request.model_dump(by_alias=True), timeout=600.0)
        if response.status_code >= 500:
            raise RuntimeError(f"server error {response.status_code}: {response.text}")
        if response.status_code >= 400:
            detail = response.json().get("detail", response.text)
            raise ValueError(f"server rejected request: {detail}")
        return response.json()
    return _HANDLERS[args.command](request).model_dump(by_alias=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        request = _build_request(args)
        payload = _dispatch(args, request)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal invariant violations
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(payload, indent=2)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
