"""JSON-over-HTTP front end for judgment elicitation.

Endpoints:
    POST   /sessions                     {"labels": [...]}
    POST   /sessions/{id}/judgments      {"i": int, "j": int, "value": number}
    GET    /sessions/{id}/report
    DELETE /sessions/{id}
    GET    /healthz

Domain errors come back as {"code", "message"} with a 4xx status. All
numbers are JSON numbers carrying 12 significant digits.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .errors import PaircompError, UnknownSession
from .sessions import SessionStore, session_status


class CreateSessionBody(BaseModel):
    labels: list[str]


class JudgmentBody(BaseModel):
    i: int
    j: int
    value: float


def create_app(log_path: str | None = None) -> FastAPI:
    app = FastAPI(title="paircomp elicitation service")
    app.state.store = SessionStore(log_path)

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(PaircompError)
    async def domain_error(_request: Request, exc: PaircompError) -> JSONResponse:
        status = 404 if isinstance(exc, UnknownSession) else 400
        return JSONResponse(status_code=status, content={"code": exc.code, "message": str(exc)})

    @app.exception_handler(ValueError)
    async def value_error(_request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"code": "ValidationError", "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def body_error(_request: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(
            status_code=422, content={"code": "ValidationError", "message": str(exc.errors())}
        )

    @app.get("/healthz")
    def healthz() -> dict:
        return {"ok": True}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody) -> dict:
        session = app.state.store.create(body.labels)
        status, remaining = session_status(session)
        return {
            "id": session.id,
            "labels": list(session.labels),
            "n": session.n,
            "status": status.value,
            "remaining": remaining,
        }

    @app.post("/sessions/{session_id}/judgments")
    def add_judgment(session_id: str, body: JudgmentBody) -> dict:
        return app.state.store.add_judgment(session_id, body.i, body.j, body.value)

    @app.get("/sessions/{session_id}/report")
    def get_report(session_id: str) -> dict:
        return app.state.store.report(session_id)

    @app.delete("/sessions/{session_id}")
    def delete_session(session_id: str) -> dict:
        app.state.store.delete(session_id)
        return {"ok": True}

    return app


app = create_app(os.environ.get("PAIRCOMP_SESSION_LOG"))


def main() -> None:
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="run the elicitation service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--session-log", default=None, help="append-only event log path")
    args = parser.parse_args()
    uvicorn.run(create_app(args.session_log), host=args.host, port=args.port)


if __name__ == "__main__":
    main()
