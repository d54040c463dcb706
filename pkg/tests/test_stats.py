"""Tests for spectra, nearest-neighbour distributions, KS distances and
histograms."""

import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su3spectra import rep, rootsys, stats
from su3spectra.algebra import gen, lipkin_hamiltonian
from su3spectra.errors import ConfigError, NumericalError
from su3spectra.stats import (
    SpacingMeasure,
    Spectrum,
    dirac_measure,
    distinct_count,
    eigenvalues,
    histogram,
    ks_distance,
    nn_distribution,
)

# exact spectrum of a*T3 + b*sum(S_ij^2) at (1,1), a=b=1, verified
# independently with 40-digit mpmath.eig and a symbolic eigendecomposition:
# {+-2*sqrt(2) (x1), +-sqrt(5) (x2), 0 (x2)}
LIPKIN_11_SPECTRUM = sorted(
    [-2 * np.sqrt(2.0), -np.sqrt(5.0), -np.sqrt(5.0), 0.0, 0.0,
     np.sqrt(5.0), np.sqrt(5.0), 2 * np.sqrt(2.0)]
)


# -- eigenvalues ---------------------------------------------------------------

def test_eigenvalues_diagonal():
    spec = eigenvalues(rep.matrix_of(gen("T3"), (1, 0)))
    assert spec.values == [-1.0, 0.0, 1.0]
    assert spec.imag_residual == 0.0
    assert spec.spectral_radius == 1.0


def test_eigenvalues_lipkin_fundamental():
    # all S^2 terms annihilate bidegree (1,0), leaving the T3 part
    spec = eigenvalues(rep.matrix_of(lipkin_hamiltonian(1, 1), (1, 0)))
    assert spec.values == [-1.0, 0.0, 1.0]


def test_eigenvalues_lipkin_adjoint_regression():
    spec = eigenvalues(rep.matrix_of(lipkin_hamiltonian(1, 1), (1, 1)))
    assert spec.size == 8
    assert spec.imag_residual <= 1e-10
    assert np.allclose(spec.values, LIPKIN_11_SPECTRUM, atol=1e-10)


def test_eigenvalues_rejects_non_real_spectrum():
    # S12 - S21 is skew, its spectrum is imaginary
    with pytest.raises(NumericalError):
        eigenvalues(rep.matrix_of(gen("S12") - gen("S21"), (1, 0)))


def test_spectrum_requires_sorted_values():
    with pytest.raises(ValueError):
        Spectrum([1.0, 0.0])


# -- nearest neighbour distribution ---------------------------------------------

def test_nn_degenerate_branch():
    mu = nn_distribution(Spectrum([5, 5, 5]))
    assert mu.atoms == [(0, Fraction(2, 3))]


def test_nn_uniform_spacings_merge():
    mu = nn_distribution(Spectrum([0, 1, 2, 3]))
    assert mu.atoms == [(Fraction(4, 3), Fraction(3, 4))]


def test_nn_zero_and_positive_gap():
    mu = nn_distribution(Spectrum([0, 0, 1]))
    assert mu.atoms == [(0, Fraction(1, 3)), (3, Fraction(1, 3))]


def test_nn_requires_two_values():
    with pytest.raises(ConfigError):
        nn_distribution(Spectrum([1.0]))


def test_nn_mass_conservation_and_mean():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 40)
        values = sorted(rng.uniform(-5, 5) for _ in range(n))
        if values[0] == values[-1]:
            continue
        mu = nn_distribution(Spectrum(values))
        assert abs(float(mu.total_mass) - (n - 1) / n) <= 1e-12
        assert abs(float(mu.mean_location()) - 1.0) <= 1e-12


spectra_exact = st.lists(st.integers(-30, 30), min_size=2, max_size=25).map(sorted)


@settings(max_examples=100)
@given(
    spectra_exact,
    st.builds(Fraction, st.integers(1, 7), st.integers(1, 7)),
    st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)),
)
def test_nn_affine_invariance_exact(values, a, b):
    mu = nn_distribution(Spectrum(values))
    shifted = nn_distribution(Spectrum([a * v + b for v in values]))
    assert shifted.atoms == mu.atoms
    # negative slope reverses the spectrum but keeps the spacing law
    reflected = nn_distribution(Spectrum(sorted(-a * v + b for v in values)))
    assert reflected.atoms == mu.atoms


# -- KS distance ----------------------------------------------------------------

def test_ks_identity_and_examples():
    mu = nn_distribution(Spectrum([0, 1, 2, 3]))
    assert ks_distance(mu, mu) == 0
    assert ks_distance(dirac_measure(), nn_distribution(Spectrum([5, 5, 5]))) == Fraction(1, 3)
    one_at_1 = SpacingMeasure([(1, Fraction(1))])
    one_at_2 = SpacingMeasure([(2, Fraction(1))])
    assert ks_distance(one_at_1, one_at_2) == 1


def test_ks_detects_gap_before_atom():
    # sup attained just before the second atom's location
    mu = SpacingMeasure([(1, Fraction(1, 2)), (2, Fraction(1, 2))])
    nu = SpacingMeasure([(2, Fraction(1))])
    assert ks_distance(mu, nu) == Fraction(1, 2)


def _random_measure(rng):
    n = rng.randint(1, 6)
    return SpacingMeasure(
        [(Fraction(rng.randint(0, 8), rng.randint(1, 3)), Fraction(1, n)) for _ in range(n)]
    )


def test_ks_is_a_metric_on_random_triples():
    rng = random.Random(5)
    for _ in range(60):
        mu, nu, rho = (_random_measure(rng) for _ in range(3))
        assert ks_distance(mu, nu) == ks_distance(nu, mu)
        assert ks_distance(mu, mu) == 0
        assert ks_distance(mu, rho) <= ks_distance(mu, nu) + ks_distance(nu, rho)


def test_dirac_measure():
    d = dirac_measure()
    assert d.total_mass == 1
    assert ks_distance(d, d) == 0


# -- distinct counts --------------------------------------------------------------

def test_distinct_count_examples():
    assert distinct_count(Spectrum([-1.0, 0.0, 1.0]), 1e-9) == 3
    assert distinct_count(Spectrum([0.0, 0.0, 0.0])) == 1
    spec = Spectrum([0.0, 1e-12, 1.0])
    assert distinct_count(spec, 1e-9) == 2
    assert distinct_count(spec, 0.0) == 3


def test_distinct_count_t3_on_interior_ray():
    # weight-enumeration oracle: t3 takes every integer in [-2k, 2k] on (k,k)
    for k in range(1, 7):
        spec = eigenvalues(rep.matrix_of(gen("T3"), (k, k)))
        assert distinct_count(spec) == 4 * k + 1
        assert distinct_count(spec) == rep.distinct_weight_count((k, k), "t3")


def test_distinct_ratio_below_bound_along_ray():
    for k in range(1, 13):
        spec = eigenvalues(rep.matrix_of(gen("T3"), (k, k)))
        ratio = Fraction(distinct_count(spec), spec.size)
        assert ratio <= rootsys.ratio_bound((1, 1), k)


# -- histograms --------------------------------------------------------------------

def test_histogram_single_atom_at_zero():
    h = histogram(SpacingMeasure([(0, Fraction(1))]), 0.1, 1.0)
    assert h.bins[0] == (0.05, 10.0)
    assert all(d == 0 for _, d in h.bins[1:])
    assert h.overflow_mass == 0.0


def test_histogram_worked_example():
    mu = SpacingMeasure([(Fraction(4, 3), Fraction(3, 4))])
    h = histogram(mu, 1.0, 3.0)
    assert [d for _, d in h.bins] == [0.0, 0.75, 0.0]
    assert [c for c, _ in h.bins] == [0.5, 1.5, 2.5]


def test_histogram_edge_goes_to_lower_bin():
    mu = SpacingMeasure([(1.0, Fraction(1, 2)), (0.5, Fraction(1, 2))])
    h = histogram(mu, 0.5, 2.0)
    densities = [d for _, d in h.bins]
    assert densities == [1.0, 1.0, 0.0, 0.0]


def test_histogram_overflow():
    mu = SpacingMeasure([(10.0, Fraction(1, 4)), (0.2, Fraction(3, 4))])
    h = histogram(mu, 1.0, 3.0)
    assert h.overflow_mass == 0.25
    assert h.bins[0][1] == 0.75


def test_histogram_rejects_bad_width():
    with pytest.raises(ConfigError):
        histogram(dirac_measure(), 0.0, 1.0)
