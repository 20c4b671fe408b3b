"""FastAPI facade over the localization library.

Endpoints accept a dataset (standard CP^n action, a general linear action,
or inline fixed-point data) and return exact results; invalid data maps to
HTTP 422 with the core validation message.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..fixedpoints import FixedPointData
from ..localization import (
    ahat_equivariant_series,
    cross_validate,
    default_order,
    spin_obstruction_check,
)
from .schemas import (
    CheckResponse,
    CrossValidateRequest,
    CrossValidateResponse,
    DataSourceRequest,
    LowestTermModel,
    SeriesRequest,
    SeriesResponse,
    WeightsResponse,
)

VARIABLE_NOTE = "coefficient at index k multiplies s^k; s^2 = t, so s^k corresponds to t^(k/2)"


def _resolve(request: DataSourceRequest) -> FixedPointData:
    try:
        return request.resolve()
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _lowest_term_model(lowest: tuple[int, int] | None) -> LowestTermModel | None:
    if lowest is None:
        return None
    exponent, coefficient = lowest
    return LowestTermModel(exponent=exponent, coefficient=str(coefficient))


def create_app() -> FastAPI:
    app = FastAPI(
        title="spinloc",
        version=__version__,
        description=(
            "Exact equivariant A-hat localization series and spin obstruction "
            "checks for circle actions with isolated fixed points."
        ),
    )

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/weights", response_model=WeightsResponse)
    def weights(request: DataSourceRequest) -> WeightsResponse:
        return WeightsResponse.from_core(_resolve(request))

    @app.post("/series", response_model=SeriesResponse)
    def series(request: SeriesRequest) -> SeriesResponse:
        data = _resolve(request)
        order = request.order if request.order is not None else default_order(data)
        expansion = ahat_equivariant_series(data, order)
        lowest = expansion.lowest_term()
        return SeriesResponse(
            order=order,
            variable_note=VARIABLE_NOTE,
            coefficients=[str(c) for c in expansion.coeffs],
            is_zero=lowest is None,
            lowest_term=_lowest_term_model(lowest),
        )

    @app.post("/check", response_model=CheckResponse)
    def check(request: DataSourceRequest) -> CheckResponse:
        report = spin_obstruction_check(_resolve(request))
        return CheckResponse(
            verdict=report.verdict.value,
            witness=report.witness,
            min_sum_plus=report.min_sum_plus,
            min_sum_minus=report.min_sum_minus,
            detail=report.detail,
        )

    @app.post("/cross-validate", response_model=CrossValidateResponse)
    def cross_validate_signals(request: CrossValidateRequest) -> CrossValidateResponse:
        try:
            report = cross_validate(request.n, request.order)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return CrossValidateResponse(
            n=report.n,
            order=report.order,
            spin_by_parity=report.spin_by_parity,
            series_is_zero=report.series_is_zero,
            lowest_term=_lowest_term_model(report.lowest_term),
            verdict=report.verdict.value,
            witness=report.witness,
            consistent=report.consistent,
            detail=report.detail,
        )

    return app


app = create_app()
