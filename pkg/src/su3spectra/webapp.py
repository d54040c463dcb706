"""HTTP facade over the core package.

Domain errors map to structured HTTP errors: invalid configuration (bad
weights, expressions, schemes, caps) becomes 400 with kind "config", and
numerical failures (non-real spectra, eigensolver breakdown) become 500
with kind "numerical".  Request-model validation failures keep FastAPI's
usual 422, which clients should treat as configuration errors too.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__, formats, rep, rootsys, stats, studies
from .errors import ConfigError, NumericalError
from .exprparse import parse_expr
from .models import (
    BasisResponse,
    CommutativityRequest,
    CommutativityResponse,
    DimResponse,
    HealthResponse,
    LipkinRequest,
    LipkinResponse,
    MatrixRequest,
    MatrixResponse,
    NormStudyRequest,
    NormStudyResponse,
    RayRowModel,
    RayStudyRequest,
    RayStudyResponse,
    RescalingCellModel,
    RescalingRowModel,
    RescalingStudyRequest,
    RescalingStudyResponse,
    SpectrumRequest,
    SpectrumResponse,
    WeightRequest,
)


def create_app() -> FastAPI:
    app = FastAPI(title="su3spectra", version=__version__)

    @app.exception_handler(ConfigError)
    async def _config_error(request: Request, exc: ConfigError):
        return JSONResponse(
            status_code=400,
            content={"detail": {"kind": "config", "message": str(exc)}},
        )

    @app.exception_handler(NumericalError)
    async def _numerical_error(request: Request, exc: NumericalError):
        return JSONResponse(
            status_code=500,
            content={"detail": {"kind": "numerical", "message": str(exc)}},
        )

    @app.get("/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", version=__version__)

    @app.post("/dim", response_model=DimResponse)
    def dim(req: WeightRequest):
        return DimResponse(weight=req.weight, dim=rootsys.weyl_dim(req.weight))

    @app.post("/basis", response_model=BasisResponse)
    def basis(req: WeightRequest):
        monomials = rep.basis(req.weight)
        return BasisResponse(
            weight=req.weight,
            dim=len(monomials),
            basis=[list(m) for m in monomials],
            basis_json=rep.basis_json(req.weight),
        )

    @app.post("/matrix", response_model=MatrixResponse)
    def matrix(req: MatrixRequest):
        expr = parse_expr(req.expr)
        m = rep.matrix_of(expr, req.weight)
        content = rep.matrix_json(m) if req.format == "json" else rep.matrix_market(m)
        return MatrixResponse(
            weight=req.weight,
            dim=m.dim,
            nonzeros=m.nnz(),
            max_nonzeros_per_column=max(m.nnz_per_column(), default=0),
            max_abs_entry=float(m.max_abs_entry()),
            content=content,
        )

    @app.post("/spectrum", response_model=SpectrumResponse)
    def spectrum(req: SpectrumRequest):
        expr = parse_expr(req.expr)
        spec = stats.eigenvalues(rep.matrix_of(expr, req.weight))
        return SpectrumResponse(
            weight=req.weight,
            dim=spec.size,
            values=[float(v) for v in spec.values],
            imag_residual=spec.imag_residual,
            csv=formats.spectrum_csv(spec),
        )

    @app.post("/ray-study", response_model=RayStudyResponse)
    def ray_study(req: RayStudyRequest):
        cfg = studies.StudyConfig(
            weight=req.weight,
            expr=parse_expr(req.expr),
            k_max=req.k_max,
            k_min=req.k_min,
            scaling=req.scaling,
            dim_cap=req.dim_cap,
            distinct_tol=req.distinct_tol,
        )
        rows = studies.ray_study(cfg)
        return RayStudyResponse(
            weight=cfg.weight,
            scaling=req.scaling,
            rows=[RayRowModel(**row.__dict__) for row in rows],
            csv=studies.ray_csv(rows),
        )

    @app.post("/rescaling-study", response_model=RescalingStudyResponse)
    def rescaling_study(req: RescalingStudyRequest):
        cfg = studies.StudyConfig(
            weight=req.weight,
            expr=parse_expr(req.expr),
            k_max=req.k_max,
            k_min=req.k_min,
            dim_cap=req.dim_cap,
        )
        rows = studies.rescaling_study(cfg, req.scalings)
        out = [
            RescalingRowModel(
                k=row.k,
                dim=row.dim,
                cells=[
                    RescalingCellModel(
                        scaling=label, s=s, d_ks=dks, full_norm=fn, linear_norm=ln
                    )
                    for label, (s, dks, fn, ln) in row.cells.items()
                ],
            )
            for row in rows
        ]
        return RescalingStudyResponse(
            weight=cfg.weight, rows=out, csv=studies.rescaling_csv(rows)
        )

    @app.post("/lipkin", response_model=LipkinResponse)
    def lipkin(req: LipkinRequest):
        result = studies.lipkin_run(
            req.weight,
            req.a,
            req.b,
            bin_width=req.bin_width,
            max_s=req.max_s,
            scaling=req.scaling,
            dim_cap=req.dim_cap,
        )
        return LipkinResponse(
            weight=result.weight,
            a=result.a,
            b=result.b,
            dim=result.dim,
            rescaling_factor=result.rescaling_factor,
            spectrum_csv=formats.spectrum_csv(result.spectrum),
            spacing_csv=formats.spacing_csv(result.measure),
            histogram_csv=formats.histogram_csv(result.hist),
            sparsity=result.sparsity,
            sparsity_json=formats.sparsity_json(result.sparsity),
        )

    @app.post("/norm-study", response_model=NormStudyResponse)
    def norm_study(req: NormStudyRequest):
        result = studies.norm_growth_study(
            req.weight, parse_expr(req.expr), req.k_max, dim_cap=req.dim_cap
        )
        return NormStudyResponse(
            weight=rootsys.check_weight(req.weight),
            rows=[[float(k), float(d), n] for k, d, n in result.rows],
            slope=result.slope,
            csv=studies.norm_csv(result),
        )

    @app.post("/commutativity-study", response_model=CommutativityResponse)
    def commutativity_study(req: CommutativityRequest):
        rows = studies.commutativity_study(
            req.weight,
            parse_expr(req.expr1),
            parse_expr(req.expr2),
            req.k_max,
            dim_cap=req.dim_cap,
        )
        return CommutativityResponse(
            weight=rootsys.check_weight(req.weight),
            rows=[[float(k), float(d), n] for k, d, n in rows],
            csv=studies.commutativity_csv(rows),
        )

    return app


app = create_app()
