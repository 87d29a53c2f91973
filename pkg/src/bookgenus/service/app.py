"""FastAPI application: one endpoint per command, same payloads as the CLI.

Parse failures map to 400, domain failures to 422, mirroring the CLI exit
codes 2 and 3; both come back as {"error": ..., "detail": ...}.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import DomainError, ParseError
from ..reports import run_braid_info, run_dbc, run_pants, run_plumb, run_snf
from .models import (BraidInfoRequest, BraidInfoResponse, DbcRequest,
                     DbcResponse, PantsRequest, PantsResponse, PlumbRequest,
                     PlumbResponse, SnfRequest, SnfResponse)


def create_app() -> FastAPI:
    app = FastAPI(
        title="bookgenus",
        version="0.1.0",
        description="Exact classification of 3-manifolds from small open "
                    "book decompositions",
    )

    @app.exception_handler(ParseError)
    async def _parse_error(_request: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(status_code=400,
                            content={"error": "parse", "detail": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain_error(_request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=422,
                            content={"error": "domain", "detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/pants", response_model=PantsResponse,
              response_model_exclude_none=True)
    def pants(request: PantsRequest) -> dict:
        return run_pants(request.exponents)

    @app.post("/dbc", response_model=DbcResponse,
              response_model_exclude_none=True)
    def dbc(request: DbcRequest) -> dict:
        return run_dbc(request.word, strands=request.strands,
                       classify=request.classify)

    @app.post("/plumb", response_model=PlumbResponse,
              response_model_exclude_none=True)
    def plumb(request: PlumbRequest) -> dict:
        return run_plumb(request.pages)

    @app.post("/snf", response_model=SnfResponse,
              response_model_exclude_none=True)
    def snf(request: SnfRequest) -> dict:
        return run_snf(request.matrix)

    @app.post("/braid-info", response_model=BraidInfoResponse,
              response_model_exclude_none=True)
    def braid_info(request: BraidInfoRequest) -> dict:
        return run_braid_info(request.word, strands=request.strands)

    return app


app = create_app()
