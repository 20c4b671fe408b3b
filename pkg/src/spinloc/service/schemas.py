"""Pydantic request/response models for the HTTP service.

Request bodies mirror the fixed-point data document format; cross-field
invariants (weight counts, distinct labels, distinct exponents) are
enforced by the core constructors when a request is resolved.  Series
coefficients travel as decimal strings so arbitrary-precision values
survive any JSON reader.
"""

from __future__ import annotations

from typing import Annotated, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..fixedpoints import (
    FixedPoint,
    FixedPointData,
    LinearAction,
    cp_standard_action,
    fixed_point_data,
)

PositiveInt = Annotated[int, Field(ge=1)]
NonNegativeInt = Annotated[int, Field(ge=0)]


class FixedPointModel(BaseModel):
    label: str
    sign: Literal[1, -1]
    weights: list[PositiveInt] = Field(min_length=1)

    @classmethod
    def from_core(cls, point: FixedPoint) -> "FixedPointModel":
        return cls(label=point.label, sign=point.sign, weights=list(point.weights))

    def to_core(self) -> FixedPoint:
        return FixedPoint(label=self.label, sign=self.sign, weights=tuple(self.weights))


class FixedPointDataModel(BaseModel):
    half_dim: PositiveInt
    points: list[FixedPointModel] = Field(min_length=1)

    @classmethod
    def from_core(cls, data: FixedPointData) -> "FixedPointDataModel":
        return cls(
            half_dim=data.half_dim,
            points=[FixedPointModel.from_core(p) for p in data.points],
        )

    def to_core(self) -> FixedPointData:
        return FixedPointData(
            half_dim=self.half_dim,
            points=tuple(p.to_core() for p in self.points),
        )


class DataSourceRequest(BaseModel):
    """Exactly one of ``n``, ``exponents``, ``data`` selects the dataset:
    the standard action on CP^n, a general linear action, or inline data."""

    n: Optional[PositiveInt] = None
    exponents: Optional[list[int]] = Field(default=None, min_length=2)
    data: Optional[FixedPointDataModel] = None

    @model_validator(mode="after")
    def _exactly_one_source(self) -> "DataSourceRequest":
        provided = [
            name for name in ("n", "exponents", "data") if getattr(self, name) is not None
        ]
        if len(provided) != 1:
            raise ValueError(
                f"exactly one of 'n', 'exponents', 'data' must be provided, got {provided or 'none'}"
            )
        return self

    def resolve(self) -> FixedPointData:
        if self.n is not None:
            return fixed_point_data(cp_standard_action(self.n))
        if self.exponents is not None:
            return fixed_point_data(LinearAction(tuple(self.exponents)))
        assert self.data is not None
        return self.data.to_core()


class SeriesRequest(DataSourceRequest):
    order: Optional[NonNegativeInt] = None


class CrossValidateRequest(BaseModel):
    n: PositiveInt
    order: Optional[NonNegativeInt] = None


class WeightsPointModel(FixedPointModel):
    weight_sum: int


class WeightsResponse(BaseModel):
    """The document format enriched with per-point weight sums; stripping
    the extra field gives back a parseable fixed-point document."""

    half_dim: int
    points: list[WeightsPointModel]

    @classmethod
    def from_core(cls, data: FixedPointData) -> "WeightsResponse":
        return cls(
            half_dim=data.half_dim,
            points=[
                WeightsPointModel(
                    label=p.label,
                    sign=p.sign,
                    weights=list(p.weights),
                    weight_sum=p.weight_sum,
                )
                for p in data.points
            ],
        )


class LowestTermModel(BaseModel):
    exponent: int
    coefficient: str


class SeriesResponse(BaseModel):
    order: int
    variable_note: str
    coefficients: list[str]
    is_zero: bool
    lowest_term: Optional[LowestTermModel]


class CheckResponse(BaseModel):
    verdict: Literal["NOT_SPIN", "INCONCLUSIVE"]
    witness: Optional[str]
    min_sum_plus: Optional[int]
    min_sum_minus: Optional[int]
    detail: str


class CrossValidateResponse(BaseModel):
    n: int
    order: int
    spin_by_parity: bool
    series_is_zero: bool
    lowest_term: Optional[LowestTermModel]
    verdict: Literal["NOT_SPIN", "INCONCLUSIVE"]
    witness: Optional[str]
    consistent: bool
    detail: str
