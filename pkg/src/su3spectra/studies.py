"""Ray, rescaling, Lipkin and norm studies over the assembly pipeline.

Every study is deterministic: identical configurations produce identical
results and byte-identical CSV artifacts.  Wall-clock timings are carried
on the row objects for diagnostics but are deliberately excluded from the
CSV renderings, which are covered by the determinism guarantee.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import formats, rootsys, stats
from .algebra import GeneratorExpr, lipkin_hamiltonian, rescale, scaling_sequence
from .errors import ConfigError
from .rep import matrix_of
from .rootsys import Weight

DEFAULT_DIM_CAP = 5000

RAY_CSV_HEADER = [
    "k",
    "dim",
    "distinct_eigenvalues",
    "distinct_ratio",
    "ks_to_dirac",
    "mass_at_zero",
    "op_norm",
]


def parse_scaling(text: str) -> tuple[str, Fraction | None, str]:
    """Parse a scaling spec "none|parameter|dimension|power:P" into
    (scheme, power, csv label)."""
    text = text.strip()
    if text in ("none", "parameter", "dimension"):
        return text, None, text
    if text.startswith("power:"):
        raw = text.split(":", 1)[1]
        try:
            p = Fraction(raw)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"bad power exponent {raw!r} in scaling {text!r}") from None
        if p < 0:
            raise ConfigError(f"power exponent must be >= 0, got {raw!r}")
        return "power", p, "power" + raw.replace("/", "_").replace(".", "_")
    raise ConfigError(
        f"unknown scaling {text!r}; expected none, parameter, dimension or power:P"
    )


@dataclass
class StudyConfig:
    """Shared configuration of the ray-type studies."""

    weight: Weight
    expr: GeneratorExpr
    k_max: int
    k_min: int = 1
    scaling: str = "none"
    dim_cap: int = DEFAULT_DIM_CAP
    distinct_tol: float = stats.DISTINCT_TOL

    def __post_init__(self):
        self.weight = rootsys.check_weight(self.weight)
        if self.weight == (0, 0):
            raise ConfigError("the ray through (0,0) is trivial and rejected")
        if self.k_min < 1 or self.k_max < self.k_min:
            raise ConfigError(
                f"need 1 <= k_min <= k_max, got k_min={self.k_min}, k_max={self.k_max}"
            )
        if self.expr.is_zero:
            raise ConfigError("study operator must be a nonzero expression")
        if not self.expr.has_real_coefficients:
            raise ConfigError("study operator must have real coefficients")
        top_dim = rootsys.weyl_dim(rootsys.ray_weight(self.weight, self.k_max))
        if top_dim > self.dim_cap:
            raise ConfigError(
                f"representation dimension {top_dim} at k={self.k_max} exceeds "
                f"the cap {self.dim_cap}"
            )
        self.scheme, self.power, self.scaling_label = parse_scaling(self.scaling)


@dataclass
class RayRow:
    k: int
    dim: int
    distinct_eigenvalues: int
    distinct_ratio: float
    ks_to_dirac: float
    mass_at_zero: float
    op_norm: float
    wall_time_ms: float

    def csv_cells(self) -> list:
        return [
            self.k,
            self.dim,
            self.distinct_eigenvalues,
            self.distinct_ratio,
            self.ks_to_dirac,
            self.mass_at_zero,
            self.op_norm,
        ]


def _spectrum_on_ray(cfg: StudyConfig, expr: GeneratorExpr, k: int) -> stats.Spectrum:
    s = scaling_sequence(cfg.scheme, cfg.weight, k, cfg.power)
    op = rescale(expr, s)
    matrix = matrix_of(op, rootsys.ray_weight(cfg.weight, k))
    return stats.eigenvalues(matrix)


def ray_study(cfg: StudyConfig) -> list[RayRow]:
    """One row per k: assemble, eigensolve, and summarize the spacing law."""
    rows = []
    for k in range(cfg.k_min, cfg.k_max + 1):
        started = time.perf_counter()
        spectrum = _spectrum_on_ray(cfg, cfg.expr, k)
        dim = spectrum.size
        measure = stats.nn_distribution(spectrum)
        distinct = stats.distinct_count(spectrum, cfg.distinct_tol)
        rows.append(
            RayRow(
                k=k,
                dim=dim,
                distinct_eigenvalues=distinct,
                distinct_ratio=distinct / dim,
                ks_to_dirac=float(stats.ks_distance(measure, stats.dirac_measure())),
                mass_at_zero=float(measure.mass_at_zero()),
                op_norm=float(spectrum.spectral_radius),
                wall_time_ms=(time.perf_counter() - started) * 1000.0,
            )
        )
    return rows


def ray_csv(rows: list[RayRow]) -> str:
    return formats.rows_csv(RAY_CSV_HEADER, [row.csv_cells() for row in rows])


@dataclass
class RescalingRow:
    k: int
    dim: int
    # per scaling label: (s_k, d_KS(full, linear), full op norm, linear op norm)
    cells: dict[str, tuple[int, float, float, float]] = field(default_factory=dict)


def rescaling_study(cfg: StudyConfig, scalings: list[str]) -> list[RescalingRow]:
    """Compare the rescaled full operator against its rescaled linear part.

    For each k and each scaling scheme: d_KS between the two
    nearest-neighbour distributions, plus both operator norms to exhibit
    the degree-wise norm growth.
    """
    if not scalings:
        raise ConfigError("rescaling study needs at least one scaling scheme")
    schemes = [parse_scaling(s) for s in scalings]
    linear = cfg.expr.linear_part()
    if linear.is_zero:
        raise ConfigError(
            "rescaling study requires an operator with a nonzero linear part"
        )
    if cfg.expr.degree <= 1:
        raise ConfigError(
            "rescaling study requires higher-degree terms on top of the linear part"
        )
    rows = []
    for k in range(cfg.k_min, cfg.k_max + 1):
        lam_k = rootsys.ray_weight(cfg.weight, k)
        row = RescalingRow(k=k, dim=rootsys.weyl_dim(lam_k))
        for scheme, power, label in schemes:
            s = scaling_sequence(scheme, cfg.weight, k, power)
            full_spec = stats.eigenvalues(matrix_of(rescale(cfg.expr, s), lam_k))
            lin_spec = stats.eigenvalues(matrix_of(rescale(linear, s), lam_k))
            dks = stats.ks_distance(
                stats.nn_distribution(full_spec), stats.nn_distribution(lin_spec)
            )
            row.cells[label] = (
                s,
                float(dks),
                float(full_spec.spectral_radius),
                float(lin_spec.spectral_radius),
            )
        rows.append(row)
    return rows


def rescaling_csv(rows: list[RescalingRow]) -> str:
    labels = list(rows[0].cells) if rows else []
    header = ["k", "dim"]
    for label in labels:
        header += [f"s_{label}", f"dks_{label}", f"full_norm_{label}", f"linear_norm_{label}"]
    table = []
    for row in rows:
        cells: list = [row.k, row.dim]
        for label in labels:
            cells += list(row.cells[label])
        table.append(cells)
    return formats.rows_csv(header, table)


@dataclass
class LipkinResult:
    weight: Weight
    a: float
    b: float
    dim: int
    rescaling_factor: int
    spectrum: stats.Spectrum
    measure: stats.SpacingMeasure
    hist: stats.Histogram
    sparsity: dict


def lipkin_run(
    weight,
    a,
    b,
    bin_width: float = 0.1,
    max_s: float = 4.0,
    scaling: str = "none",
    dim_cap: int = DEFAULT_DIM_CAP,
) -> LipkinResult:
    """Assemble a*T3 + b*sum(S_ij^2) on one representation and bin its
    nearest-neighbour distribution.

    An optional rescaling treats the weight as the k-th point of the ray
    through weight/gcd, with k = gcd(l1, l2); the default applies none.
    """
    lam = rootsys.check_weight(weight)
    dim = rootsys.weyl_dim(lam)
    if dim > dim_cap:
        raise ConfigError(f"representation dimension {dim} exceeds the cap {dim_cap}")
    if dim < 2:
        raise ConfigError("Lipkin run needs a representation of dimension >= 2")
    scheme, power, _ = parse_scaling(scaling)
    k = math.gcd(lam[0], lam[1])
    base = (lam[0] // k, lam[1] // k) if k else lam
    s = scaling_sequence(scheme, base, k, power) if k else 1
    expr = rescale(lipkin_hamiltonian(a, b), s)
    matrix = matrix_of(expr, lam)
    spectrum = stats.eigenvalues(matrix)
    measure = stats.nn_distribution(spectrum)
    hist = stats.histogram(measure, bin_width, max_s)
    sparsity = {
        "weight": list(lam),
        "a": float(a),
        "b": float(b),
        "dim": dim,
        "rescaling_factor": s,
        "nonzeros": matrix.nnz(),
        "max_nonzeros_per_column": max(matrix.nnz_per_column(), default=0),
        "max_abs_entry": float(matrix.max_abs_entry()),
        "imag_residual": spectrum.imag_residual,
    }
    return LipkinResult(lam, float(a), float(b), dim, s, spectrum, measure, hist, sparsity)


@dataclass
class NormStudyResult:
    rows: list[tuple[int, int, float]]  # (k, dim, op_norm)
    slope: float


def norm_growth_study(
    weight, expr: GeneratorExpr, k_max: int, dim_cap: int = DEFAULT_DIM_CAP
) -> NormStudyResult:
    """Spectral radius of a degree-1 operator along a ray, with the slope of
    the least-squares line through (k, norm).  The zero operator is allowed
    and reports identically zero norms."""
    if not (expr.is_zero or expr.is_linear):
        raise ConfigError("norm study requires a degree-1 operator")
    if not expr.has_real_coefficients:
        raise ConfigError("norm study requires real coefficients")
    lam = rootsys.check_weight(weight)
    if lam == (0, 0):
        raise ConfigError("the ray through (0,0) is trivial and rejected")
    if k_max < 1:
        raise ConfigError(f"k_max must be >= 1, got {k_max}")
    top_dim = rootsys.weyl_dim(rootsys.ray_weight(lam, k_max))
    if top_dim > dim_cap:
        raise ConfigError(f"representation dimension {top_dim} exceeds the cap {dim_cap}")
    rows = []
    for k in range(1, k_max + 1):
        lam_k = rootsys.ray_weight(lam, k)
        if expr.is_zero:
            norm = 0.0
        else:
            norm = float(stats.eigenvalues(matrix_of(expr, lam_k)).spectral_radius)
        rows.append((k, rootsys.weyl_dim(lam_k), norm))
    if len(rows) >= 2:
        ks = np.array([r[0] for r in rows], dtype=float)
        norms = np.array([r[2] for r in rows], dtype=float)
        slope = float(np.polyfit(ks, norms, 1)[0])
    else:
        slope = float(rows[0][2])
    return NormStudyResult(rows, slope)


NORM_CSV_HEADER = ["k", "dim", "op_norm"]


def norm_csv(result: NormStudyResult) -> str:
    return formats.rows_csv(NORM_CSV_HEADER, [list(r) for r in result.rows])


def commutativity_study(
    weight,
    expr1: GeneratorExpr,
    expr2: GeneratorExpr,
    k_max: int,
    dim_cap: int = DEFAULT_DIM_CAP,
) -> list[tuple[int, int, float]]:
    """Norm of the parameter-rescaled commutator along a ray.

    The commutator of two degree-1 operators is degree 1 again but is
    rescaled as a degree-2 word (factor 1/k^2), while its represented norm
    grows like k, so the values decay like 1/k.  The commutator need not be
    abstractly hermitian, so its spectrum may be imaginary; the norm is the
    largest eigenvalue modulus.
    """
    for e in (expr1, expr2):
        if not e.is_linear:
            raise ConfigError("commutativity study requires degree-1 operators")
        if not e.has_real_coefficients:
            raise ConfigError("commutativity study requires real coefficients")
    lam = rootsys.check_weight(weight)
    if lam == (0, 0):
        raise ConfigError("the ray through (0,0) is trivial and rejected")
    if k_max < 1:
        raise ConfigError(f"k_max must be >= 1, got {k_max}")
    top_dim = rootsys.weyl_dim(rootsys.ray_weight(lam, k_max))
    if top_dim > dim_cap:
        raise ConfigError(f"representation dimension {top_dim} exceeds the cap {dim_cap}")
    commutator = expr1 * expr2 - expr2 * expr1
    rows = []
    for k in range(1, k_max + 1):
        lam_k = rootsys.ray_weight(lam, k)
        scaled = rescale(commutator, k)
        norm = stats.spectral_radius_complex(matrix_of(scaled, lam_k))
        rows.append((k, rootsys.weyl_dim(lam_k), norm))
    return rows


COMMUTATIVITY_CSV_HEADER = ["k", "dim", "commutator_norm"]


def commutativity_csv(rows: list[tuple[int, int, float]]) -> str:
    return formats.rows_csv(COMMUTATIVITY_CSV_HEADER, [list(r) for r in rows])
