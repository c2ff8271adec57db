"""FastAPI facade over the shared compute layer.

Every endpoint delegates to charvar.queries; domain errors surface as
HTTP 400 with the error class name, matching the CLI's diagnostics.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import CharvarError
from ..queries import compute_epoly, compute_selftest, compute_table, compute_verify
from .models import (
    EPolyRequest,
    PolyResult,
    SelftestRequest,
    SelftestResponse,
    TableRequest,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(
        title="charvar",
        version=__version__,
        description=(
            "Serre polynomials and Euler characteristics of character "
            "varieties of free groups"
        ),
    )

    @app.exception_handler(CharvarError)
    async def _charvar_error(request: Request, exc: CharvarError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    @app.post("/epoly", response_model=PolyResult, response_model_exclude_none=True)
    def epoly(req: EPolyRequest) -> dict[str, Any]:
        return compute_epoly(req.group, req.n, req.r, req.stratum)

    @app.post("/euler", response_model=PolyResult, response_model_exclude_none=True)
    def euler(req: EPolyRequest) -> dict[str, Any]:
        return compute_epoly(req.group, req.n, req.r, req.stratum)

    @app.post(
        "/table", response_model=list[PolyResult], response_model_exclude_none=True
    )
    def table(req: TableRequest) -> list[dict[str, Any]]:
        return compute_table(req.group, req.n_max, req.r_max, req.per_stratum)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> dict[str, Any]:
        rows, status = compute_verify(req.n, req.r, req.qs)
        return {"status": status, "rows": rows}

    @app.post("/selftest", response_model=SelftestResponse)
    def selftest(req: SelftestRequest) -> dict[str, Any]:
        items = compute_selftest(req.criteria)
        return {"passed": all(item["passed"] for item in items), "items": items}

    return app


app = create_app()
