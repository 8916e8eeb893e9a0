"""FastAPI application exposing the invariant computations.

The service is stateless: every request carries everything it needs
(including the optional constants table as text), so the CLI can run it
in process through an ASGI transport or talk to a long-running instance
with identical behaviour.

Error contract: malformed input maps to HTTP 400 with error "parse" or
"domain", unsupported-domain queries to 400 with error "unsupported", and
internal invariant violations to 500 with error "invariant".
"""

from __future__ import annotations

import cmath
import json
import warnings

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import __version__
from ..domains import DomainError, UnsupportedDomainError
from ..invariants import (
    InvariantViolationError,
    UnsupportedBoundWarning,
    fridman_value,
    load_constants,
    quotient_bounds,
    squeezing_value,
)
from ..parsing import ParseError, parse_domain, parse_point
from ..reports import (
    annulus_report_text,
    explain_text,
    format_complex,
    jsonable,
    stability_csv,
    stability_svg,
    sweep_csv,
    sweep_svg,
)
from ..stability import (
    ExhaustionSequence,
    annulus_quotient_report,
    convergence_assert,
    e_lower_trajectory,
    s_lower_trajectory,
    slit_sweep,
)
from .models import (
    AnnulusReportModel,
    ErrorResponse,
    EvalRequest,
    EvalResponse,
    HealthResponse,
    IntervalModel,
    StabilityRequest,
    StabilityResponse,
    SweepRequest,
    SweepResponse,
    SweepRowModel,
    TrajectoryPointModel,
)

_MEDIA_TYPES = {"csv": "text/csv", "json": "application/json", "svg": "image/svg+xml"}

_ERROR_RESPONSES = {
    400: {"model": ErrorResponse},
    500: {"model": ErrorResponse},
}


def create_app() -> FastAPI:
    app = FastAPI(
        title="holoinv",
        version=__version__,
        description="Certified bounds for the squeezing function and the "
        "Fridman invariant on model domains.",
    )

    def _error(status: int, kind: str, exc: Exception) -> JSONResponse:
        return JSONResponse(
            status_code=status, content={"error": kind, "message": str(exc)}
        )

    @app.exception_handler(ParseError)
    async def _on_parse(request, exc):
        return _error(400, "parse", exc)

    @app.exception_handler(UnsupportedDomainError)
    async def _on_unsupported(request, exc):
        return _error(400, "unsupported", exc)

    @app.exception_handler(DomainError)
    async def _on_domain(request, exc):
        return _error(400, "domain", exc)

    @app.exception_handler(InvariantViolationError)
    async def _on_invariant(request, exc):
        return _error(500, "invariant", exc)

    @app.get("/api/health", response_model=HealthResponse)
    async def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/api/eval", response_model=EvalResponse, responses=_ERROR_RESPONSES)
    async def eval_point(req: EvalRequest) -> EvalResponse:
        table = load_constants(req.constants) if req.constants else None
        domain = parse_domain(req.domain, table)
        point = parse_point(req.point)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            s = squeezing_value(domain, point)
            e = fridman_value(domain, point)
            m = quotient_bounds(domain, point)
        notes = sorted(
            {
                str(w.message)
                for w in caught
                if issubclass(w.category, UnsupportedBoundWarning)
            }
        )
        explain = None
        if req.explain:
            explain = explain_text(
                [("squeezing s", s), ("fridman e", e), ("quotient m = s/e", m)]
            )
        return EvalResponse(
            domain=domain.spec(),
            point=req.point,
            squeezing=IntervalModel.from_bound(s),
            fridman=IntervalModel.from_bound(e),
            quotient=IntervalModel.from_bound(m),
            warnings=notes,
            explain=explain,
        )

    @app.post("/api/sweep", response_model=SweepResponse, responses=_ERROR_RESPONSES)
    async def sweep(req: SweepRequest) -> SweepResponse:
        rows = slit_sweep(req.a_start, req.a_stop, req.step, jobs=req.jobs)
        if req.format == "csv":
            content = sweep_csv(rows)
        elif req.format == "svg":
            content = sweep_svg(rows)
        else:
            content = json.dumps({"rows": [jsonable(r) for r in rows]}, indent=2)
        return SweepResponse(
            rows=[
                SweepRowModel(
                    A=r.A, a=r.a, s_exact=r.s_exact, e_lower=r.e_lower, m_upper=r.m_upper
                )
                for r in rows
            ],
            content=content,
            media_type=_MEDIA_TYPES[req.format],
        )

    @app.post(
        "/api/stability", response_model=StabilityResponse, responses=_ERROR_RESPONSES
    )
    async def stability(req: StabilityRequest) -> StabilityResponse:
        pt = parse_point(req.z0)
        if len(pt) != 1:
            raise ParseError(f"stability base point must be one-dimensional, got {req.z0!r}")
        z0 = pt[0]
        rotation = cmath.phase(z0) if z0.imag != 0 or z0.real < 0 else 0.0
        seq = ExhaustionSequence.geometric(z0, r1=req.r1, floor=req.floor)
        s_rows = s_lower_trajectory(seq)
        e_rows = e_lower_trajectory(seq)
        limit = abs(z0)
        s_converged = convergence_assert([p.bound for p in s_rows], limit, tol=1e-3)
        e_stable = convergence_assert(
            [p.bound for p in e_rows], e_rows[-1].bound, tol=1e-12
        )
        report = annulus_quotient_report(
            z0, seq.radii[0], s_upper=req.s_upper, floor=req.floor
        )
        annulus_model = AnnulusReportModel(
            z0=format_complex(report.z0),
            inner_radius=report.inner_radius,
            s_lower=report.s_lower,
            s_upper=report.s_upper,
            e_lower=report.e_lower,
            e_upper=report.e_upper,
            m_lower=report.m_lower,
            m_upper=report.m_upper,
            conclusive=report.conclusive,
            verdict=report.verdict,
            evidence_converged=report.evidence_converged,
            text=annulus_report_text(report),
        )
        if req.format == "csv":
            content = stability_csv(s_rows, e_rows)
        elif req.format == "svg":
            content = stability_svg(s_rows, e_rows, limit)
        else:
            content = json.dumps(
                {
                    "z0": format_complex(z0),
                    "rotation": rotation,
                    "s_trajectory": [jsonable(p) for p in s_rows],
                    "e_trajectory": [jsonable(p) for p in e_rows],
                    "s_limit": limit,
                    "s_converged": s_converged,
                    "e_stable": e_stable,
                    "annulus": jsonable(annulus_model.model_dump()),
                },
                indent=2,
            )
        return StabilityResponse(
            z0=format_complex(z0),
            rotation=rotation,
            s_trajectory=[
                TrajectoryPointModel(
                    k=p.k, r=p.r, bound=p.bound, certificate_kind=p.certificate_kind
                )
                for p in s_rows
            ],
            e_trajectory=[
                TrajectoryPointModel(
                    k=p.k, r=p.r, bound=p.bound, certificate_kind=p.certificate_kind
                )
                for p in e_rows
            ],
            s_limit=limit,
            s_converged=s_converged,
            e_stable=e_stable,
            annulus=annulus_model,
            content=content,
            media_type=_MEDIA_TYPES[req.format],
        )

    return app
