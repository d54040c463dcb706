"""Eigenvalues, nearest-neighbour distributions and Kolmogorov-Smirnov
distances.

A spectrum is the sorted list of all eigenvalues of the (generally
non-symmetric) densified operator matrix.  Abstractly hermitian operators
have real spectra in every unitary representation even though their matrix
realization here is not hermitian, so imaginary parts beyond the reality
tolerance signal a bug or a non-hermitian input and fail loudly.

The nearest-neighbour distribution scales the consecutive gaps by
N/(x_N - x_1) and gives each the mass 1/N; no spectral unfolding is
performed (the normalization is by the global mean spacing only, which
differs from common random-matrix practice).  Masses are exact Fractions
(they come from counting); atom locations stay exact whenever the input
spectrum is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import ConfigError, NumericalError
from .rep import SparseMatrix

MERGE_TOL = 1e-12
REALITY_TOL = 1e-8
DISTINCT_TOL = 1e-9


@dataclass
class Spectrum:
    """Sorted eigenvalues with the imaginary residual discarded at the
    solver boundary."""

    values: list
    imag_residual: float = 0.0

    def __post_init__(self):
        if not self.values:
            raise ValueError("spectrum must contain at least one eigenvalue")
        if any(self.values[i] > self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("spectrum values must be sorted ascending")

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def spectral_radius(self):
        return max(abs(self.values[0]), abs(self.values[-1]))


@dataclass
class SpacingMeasure:
    """Finite discrete measure on the half line: (location, mass) atoms."""

    atoms: list = field(default_factory=list)

    def __post_init__(self):
        for loc, mass in self.atoms:
            if loc < 0:
                raise ValueError(f"atom location {loc!r} is negative")
            if mass <= 0:
                raise ValueError(f"atom mass {mass!r} is not positive")
        self.atoms = sorted(self.atoms, key=lambda a: a[0])

    @property
    def total_mass(self):
        return sum((mass for _, mass in self.atoms), Fraction(0))

    def mass_at_zero(self, eps: float = 1e-9):
        return sum((mass for loc, mass in self.atoms if loc < eps), Fraction(0))

    def mean_location(self):
        return sum((loc * mass for loc, mass in self.atoms), Fraction(0))


def eigenvalues(matrix: SparseMatrix, reality_tol: float = REALITY_TOL) -> Spectrum:
    """All eigenvalues of the densified matrix, sorted ascending.

    Diagonal matrices short-circuit to their (exact) diagonal.  Otherwise a
    dense non-symmetric eigensolver runs; imaginary parts are dropped and
    recorded, and the construction fails if the largest one exceeds
    reality_tol * (1 + spectral radius).
    """
    if matrix.dim < 1:
        raise ConfigError("matrix must have dimension >= 1")
    if matrix.is_diagonal():
        vals = sorted(float(v) for v in matrix.diagonal())
        return Spectrum(vals, 0.0)
    try:
        w = np.linalg.eigvals(matrix.to_dense())
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed to converge: {exc}") from exc
    real = np.sort(w.real)
    residual = float(np.max(np.abs(w.imag)))
    radius = float(max(abs(real[0]), abs(real[-1])))
    if residual > reality_tol * (1.0 + radius):
        raise NumericalError(
            f"spectrum is not real: imaginary residual {residual:.3e} exceeds "
            f"{reality_tol:.1e}*(1+{radius:.3e}); the operator is likely not "
            "abstractly hermitian"
        )
    return Spectrum([float(v) for v in real], residual)


def nn_distribution(spectrum: Spectrum) -> SpacingMeasure:
    """Nearest-neighbour distribution of a spectrum.

    For x_1 != x_N: one atom of mass 1/N at each scaled gap
    (N/(x_N-x_1)) * (x_{j+1}-x_j), atoms equal within 1e-12 merged.  For a
    fully degenerate spectrum: the single atom (0, (N-1)/N).
    """
    values = spectrum.values
    n = len(values)
    if n < 2:
        raise ConfigError("nearest-neighbour distribution needs at least 2 eigenvalues")
    x1, xn = values[0], values[-1]
    if x1 == xn:
        return SpacingMeasure([(0, Fraction(n - 1, n))])
    span = xn - x1
    scale = Fraction(n) / span if isinstance(span, (int, Fraction)) else n / span
    scaled = sorted((values[i + 1] - values[i]) * scale for i in range(n - 1))
    atoms = []
    cluster_loc, cluster_count = scaled[0], 1
    for loc in scaled[1:]:
        if loc - cluster_loc <= MERGE_TOL:
            cluster_count += 1
        else:
            atoms.append((cluster_loc, Fraction(cluster_count, n)))
            cluster_loc, cluster_count = loc, 1
    atoms.append((cluster_loc, Fraction(cluster_count, n)))
    return SpacingMeasure(atoms)


def dirac_measure() -> SpacingMeasure:
    """Unit mass at zero, the degenerate limit distribution."""
    return SpacingMeasure([(0, Fraction(1))])


def ks_distance(mu: SpacingMeasure, nu: SpacingMeasure):
    """Kolmogorov-Smirnov distance: sup over x >= 0 of |F_mu(x) - F_nu(x)|.

    Both CDFs are right-continuous step functions, so the sup is attained at
    an atom location or just before one; both are inspected exactly.
    """
    mass_mu: dict = {}
    for loc, mass in mu.atoms:
        mass_mu[loc] = mass_mu.get(loc, 0) + mass
    mass_nu: dict = {}
    for loc, mass in nu.atoms:
        mass_nu[loc] = mass_nu.get(loc, 0) + mass
    locations = sorted(set(mass_mu) | set(mass_nu))
    f_mu = f_nu = Fraction(0)
    best = Fraction(0)
    for loc in locations:
        before = abs(f_mu - f_nu)
        if before > best:
            best = before
        f_mu = f_mu + mass_mu.get(loc, 0)
        f_nu = f_nu + mass_nu.get(loc, 0)
        at = abs(f_mu - f_nu)
        if at > best:
            best = at
    return best


def distinct_count(spectrum: Spectrum, tol: float = DISTINCT_TOL) -> int:
    """Number of eigenvalue clusters; a new cluster starts when a gap
    exceeds tol * (1 + spectral radius)."""
    if tol < 0:
        raise ConfigError(f"tolerance must be >= 0, got {tol!r}")
    values = spectrum.values
    threshold = tol * (1 + spectrum.spectral_radius)
    count = 1
    for i in range(len(values) - 1):
        if values[i + 1] - values[i] > threshold:
            count += 1
    return count


def spectral_radius_complex(matrix: SparseMatrix) -> float:
    """Largest eigenvalue modulus without any reality requirement.

    Used for operators that are not abstractly hermitian, e.g. commutators,
    whose spectra are allowed to be imaginary.
    """
    if matrix.is_diagonal():
        return max((abs(float(v)) for v in matrix.diagonal()), default=0.0)
    try:
        w = np.linalg.eigvals(matrix.to_dense())
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed to converge: {exc}") from exc
    return float(np.max(np.abs(w)))


@dataclass
class Histogram:
    """Density histogram of a spacing measure plus the overflow mass beyond
    the last bin."""

    bins: list[tuple[float, float]]
    overflow_mass: float


def histogram(mu: SpacingMeasure, bin_width: float, max_s: float) -> Histogram:
    """Bin a spacing measure into [i*w, (i+1)*w) with density mass/width.

    Atoms exactly on a bin edge belong to the lower bin; mass beyond max_s
    goes to the overflow bucket.  Bin assignment is computed in exact
    rational arithmetic so edge ties are deterministic.
    """
    if bin_width <= 0:
        raise ConfigError(f"bin width must be positive, got {bin_width!r}")
    if max_s <= 0:
        raise ConfigError(f"histogram range must be positive, got {max_s!r}")
    width = Fraction(bin_width)
    nbins = math.ceil(Fraction(max_s) / width)
    masses = [Fraction(0)] * nbins
    overflow = Fraction(0)
    for loc, mass in mu.atoms:
        q = Fraction(loc) / width
        idx = math.ceil(q) - 1 if q > 0 else 0
        if idx >= nbins:
            overflow += mass
        else:
            masses[idx] += mass
    bins = [
        (float((Fraction(i) + Fraction(1, 2)) * width), float(m / width))
        for i, m in enumerate(masses)
    ]
    return Histogram(bins, float(overflow))
