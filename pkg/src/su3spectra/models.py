"""Pydantic request/response models of the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

WeightPair = tuple[int, int]


def _check_labels(weight: WeightPair) -> WeightPair:
    if weight[0] < 0 or weight[1] < 0:
        raise ValueError("Dynkin labels must be non-negative")
    return weight


class WeightRequest(BaseModel):
    weight: WeightPair

    @field_validator("weight")
    @classmethod
    def _weight_valid(cls, v):
        return _check_labels(v)


class DimResponse(BaseModel):
    weight: WeightPair
    dim: int


class BasisResponse(BaseModel):
    weight: WeightPair
    dim: int
    basis: list[list[int]]
    basis_json: str


class MatrixRequest(WeightRequest):
    expr: str
    format: str = Field(default="json", pattern="^(json|mm)$")


class MatrixResponse(BaseModel):
    weight: WeightPair
    dim: int
    nonzeros: int
    max_nonzeros_per_column: int
    max_abs_entry: float
    content: str  # rendered JSON or MatrixMarket text, per requested format


class SpectrumRequest(WeightRequest):
    expr: str


class SpectrumResponse(BaseModel):
    weight: WeightPair
    dim: int
    values: list[float]
    imag_residual: float
    csv: str


class RayStudyRequest(WeightRequest):
    expr: str
    k_max: int = Field(ge=1)
    k_min: int = Field(default=1, ge=1)
    scaling: str = "none"
    dim_cap: int = Field(default=5000, ge=1)
    distinct_tol: float = Field(default=1e-9, ge=0.0)


class RayRowModel(BaseModel):
    k: int
    dim: int
    distinct_eigenvalues: int
    distinct_ratio: float
    ks_to_dirac: float
    mass_at_zero: float
    op_norm: float
    wall_time_ms: float


class RayStudyResponse(BaseModel):
    weight: WeightPair
    scaling: str
    rows: list[RayRowModel]
    csv: str


class RescalingStudyRequest(WeightRequest):
    expr: str
    k_max: int = Field(ge=1)
    k_min: int = Field(default=1, ge=1)
    scalings: list[str] = Field(default=["parameter", "dimension"])
    dim_cap: int = Field(default=5000, ge=1)


class RescalingCellModel(BaseModel):
    scaling: str
    s: int
    d_ks: float
    full_norm: float
    linear_norm: float


class RescalingRowModel(BaseModel):
    k: int
    dim: int
    cells: list[RescalingCellModel]


class RescalingStudyResponse(BaseModel):
    weight: WeightPair
    rows: list[RescalingRowModel]
    csv: str


class LipkinRequest(WeightRequest):
    a: float = 1.0
    b: float = 1.0
    bin_width: float = Field(default=0.1, gt=0.0)
    max_s: float = Field(default=4.0, gt=0.0)
    scaling: str = "none"
    dim_cap: int = Field(default=5000, ge=1)


class LipkinResponse(BaseModel):
    weight: WeightPair
    a: float
    b: float
    dim: int
    rescaling_factor: int
    spectrum_csv: str
    spacing_csv: str
    histogram_csv: str
    sparsity: dict
    sparsity_json: str


class NormStudyRequest(WeightRequest):
    expr: str
    k_max: int = Field(ge=1)
    dim_cap: int = Field(default=5000, ge=1)


class NormStudyResponse(BaseModel):
    weight: WeightPair
    rows: list[list[float]]  # (k, dim, op_norm)
    slope: float
    csv: str


class CommutativityRequest(WeightRequest):
    expr1: str
    expr2: str
    k_max: int = Field(ge=1)
    dim_cap: int = Field(default=5000, ge=1)


class CommutativityResponse(BaseModel):
    weight: WeightPair
    rows: list[list[float]]  # (k, dim, commutator_norm)
    csv: str


class HealthResponse(BaseModel):
    status: str
    version: str
