"""Exact combinatorics of the A2 root system.

Highest weights are pairs of non-negative Dynkin labels (l1, l2) on the two
fundamental weights.  All pairings are coroot pairings <., alpha_v>, so they
are integers on the weight lattice and every ratio below is an exact
Fraction.  The three positive roots are represented by their coefficient
vectors over the simple coroots; with that convention

    pairing(lam, alpha1) = l1,   pairing(lam, alpha2) = l2,
    pairing(lam, alpha1 + alpha2) = l1 + l2.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ConfigError

Weight = tuple[int, int]

# coefficient vectors of the positive roots over the simple coroots
POSITIVE_ROOTS: tuple[tuple[int, int], ...] = ((1, 0), (0, 1), (1, 1))

# half-sum of positive roots, in Dynkin labels
DELTA: Weight = (1, 1)

WEYL_ORDER = 6

# rows of the A2 Cartan matrix: pairings of the simple roots with the coroots
CARTAN_MATRIX = ((2, -1), (-1, 2))


def check_weight(lam) -> Weight:
    """Validate and normalize a highest weight to a pair of ints >= 0."""
    try:
        l1, l2 = lam
    except (TypeError, ValueError):
        raise ConfigError(f"highest weight must be a pair, got {lam!r}") from None
    if l1 != int(l1) or l2 != int(l2):
        raise ConfigError(f"Dynkin labels must be integers, got {lam!r}")
    l1, l2 = int(l1), int(l2)
    if l1 < 0 or l2 < 0:
        raise ConfigError(f"Dynkin labels must be non-negative, got {lam!r}")
    return (l1, l2)


def pairing(lam: Weight, root: tuple[int, int]) -> int:
    """Coroot pairing <lam, alpha_v> for a root given by coroot coefficients."""
    return lam[0] * root[0] + lam[1] * root[1]


def is_interior(lam: Weight) -> bool:
    """True iff lam lies in the interior of the Weyl chamber (both labels > 0)."""
    l1, l2 = check_weight(lam)
    return l1 > 0 and l2 > 0


def weyl_dim(lam: Weight) -> int:
    """Dimension of the irreducible representation with highest weight lam.

    Closed form of the Weyl product for A2:
    (l1+1)(l2+1)(l1+l2+2)/2, always a positive integer.
    """
    l1, l2 = check_weight(lam)
    return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) // 2


def dim_lower_bound(lam: Weight) -> Fraction:
    """Product of pairing ratios over the roots where <lam, alpha_v> > 0.

    A lower bound for weyl_dim(lam); the empty product (lam = 0) is 1.
    """
    lam = check_weight(lam)
    out = Fraction(1)
    for root in POSITIVE_ROOTS:
        num = pairing(lam, root)
        if num > 0:
            out *= Fraction(num, pairing(DELTA, root))
    return out


def weight_count_bound(lam: Weight) -> int:
    """Upper bound ord(W) * (l1+1)(l2+1) for the number of distinct weights."""
    l1, l2 = check_weight(lam)
    return WEYL_ORDER * (l1 + 1) * (l2 + 1)


def q_of(lam: Weight) -> int:
    """Number of positive roots with <lam, alpha_v> > 0 (0, 2 or 3 for A2)."""
    lam = check_weight(lam)
    return sum(1 for root in POSITIVE_ROOTS if pairing(lam, root) > 0)


def ray_weight(lam: Weight, k: int) -> Weight:
    """k-th weight (k*l1, k*l2) on the ray through lam."""
    l1, l2 = check_weight(lam)
    if k < 0 or k != int(k):
        raise ConfigError(f"ray parameter must be a non-negative integer, got {k!r}")
    return (l1 * int(k), l2 * int(k))


def orbit_volume(lam: Weight) -> Fraction:
    """Coadjoint-orbit volume as the shifted Weyl product.

    Evaluates prod <lam, alpha_v> / <delta, alpha_v> over all positive roots,
    which is l1*l2*(l1+l2)/2 for A2.  Zero on the border of the chamber.
    """
    lam = check_weight(lam)
    out = Fraction(1)
    for root in POSITIVE_ROOTS:
        out *= Fraction(pairing(lam, root), pairing(DELTA, root))
    return out


def ratio_bound(lam: Weight, k: int) -> Fraction:
    """Upper bound for (#distinct eigenvalues)/dim at step k of the ray.

    ord(W) * prod_j (k*l_j + 1) divided by the product of
    <k*lam, alpha_v>/<delta, alpha_v> over the roots with positive pairing.
    Rejects lam = (0, 0), where the denominator is an empty product of the
    wrong kind (no positive pairings at all).
    """
    l1, l2 = check_weight(lam)
    if (l1, l2) == (0, 0):
        raise ConfigError("ratio bound undefined for the trivial ray (0,0)")
    if k < 1:
        raise ConfigError(f"ray parameter must be >= 1, got {k!r}")
    klam = ray_weight(lam, k)
    numerator = WEYL_ORDER * (klam[0] + 1) * (klam[1] + 1)
    denominator = Fraction(1)
    for root in POSITIVE_ROOTS:
        p = pairing(klam, root)
        if p > 0:
            denominator *= Fraction(p, pairing(DELTA, root))
    return Fraction(numerator) / denominator
