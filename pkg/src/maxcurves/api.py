"""HTTP front end: a thin FastAPI wrapper over the service handlers."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__, service
from .schemas import (ClassifyRequest, ClassifyResponse, SemigroupRequest,
                      SemigroupResponse, VerifyRequest, VerifyResponse)


def create_app() -> FastAPI:
    app = FastAPI(
        title="maxcurves",
        version=__version__,
        description="Weierstrass gap sequences, isomorphism classes and "
                    "automorphism checks for the curves y^m = x^i(x^2+1) "
                    "over GF(q^2), m = (q+1)/2.",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/semigroup", response_model=SemigroupResponse)
    def semigroup(req: SemigroupRequest) -> SemigroupResponse:
        try:
            return service.semigroup_report(req)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/classify", response_model=ClassifyResponse)
    def classify(req: ClassifyRequest) -> ClassifyResponse:
        try:
            return service.classification_report(req)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        return service.verification_report(req)

    return app


app = create_app()
