"""Irreducible SU(3) representations on bi-graded polynomials in the minors.

The representation of highest weight (l1, l2) lives on polynomials that are
homogeneous of degree l1 in x1, x2, x3 and of degree l2 in y1, y2, y3,
subject to the single relation x1*y1 + x2*y2 + x3*y3 = 0.  Basis monomials
are exponent vectors [a1, a2, a3, b1, b2, b3] with a3*b3 = 0; every x3*y3
factor is rewritten to -x1*y1 - x2*y2.

Generator actions are the first-order substitution rules

    S_ij:  -x_j d/dx_i + y_i d/dy_j
    T3:    -x1 d/dx1 + x3 d/dx3 + y1 d/dy1 - y3 d/dy3   (diagonal)
    H2:    -x2 d/dx2 + x3 d/dx3 + y2 d/dy2 - y3 d/dy3   (diagonal)

The realization acts through the inverse group element, so the diagonal
eigenvalues carry the dual sign: T3 has eigenvalue -1 on x1 although
T3 = diag(1,0,-1).  Nearest-neighbour statistics are unaffected (negating a
spectrum preserves spacings); the sign is documented, not "fixed".

All assembly is exact integer/rational arithmetic; floats appear only at
the eigensolver boundary and in exports.
"""

from __future__ import annotations

import json
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import rootsys
from .algebra import GeneratorExpr, check_generator
from .errors import ConfigError

Monomial = tuple[int, int, int, int, int, int]

WeightVector = namedtuple("WeightVector", ["t3", "h2"])


def check_monomial(m) -> Monomial:
    m = tuple(m)
    if len(m) != 6 or any(e != int(e) or e < 0 for e in m):
        raise ConfigError(f"monomial must be six non-negative integers, got {m!r}")
    return tuple(int(e) for e in m)


def is_canonical(m: Monomial) -> bool:
    """Canonical representatives have no x3*y3 factor."""
    return m[2] == 0 or m[5] == 0


def bidegree(m: Monomial) -> tuple[int, int]:
    return (m[0] + m[1] + m[2], m[3] + m[4] + m[5])


def weight_of(m: Monomial) -> WeightVector:
    """Diagonal (T3, H2) eigenvalues of a canonical monomial."""
    a1, a2, a3, b1, b2, b3 = m
    return WeightVector(-a1 + a3 + b1 - b3, -a2 + a3 + b2 - b3)


def basis(lam) -> list[Monomial]:
    """All canonical monomials of bidegree lam, in lexicographic order.

    The order is the monomial order with x1 > x2 > x3 > y1 > y2 > y3, i.e.
    exponent vectors descending, so basis((1,0)) is [x1, x2, x3].
    """
    l1, l2 = rootsys.check_weight(lam)
    out = []
    for a1 in range(l1, -1, -1):
        for a2 in range(l1 - a1, -1, -1):
            a3 = l1 - a1 - a2
            for b1 in range(l2, -1, -1):
                for b2 in range(l2 - b1, -1, -1):
                    b3 = l2 - b1 - b2
                    if a3 and b3:
                        continue
                    out.append((a1, a2, a3, b1, b2, b3))
    return out


def _reduce_dict(terms: dict) -> dict:
    """Rewrite every x3*y3 factor in place until all keys are canonical.

    Works on monomial -> coefficient dicts with int or Fraction values.
    Each rewrite strictly decreases min(a3, b3), so this terminates; the
    result is independent of the processing order (tested, not assumed).
    """
    pending = [m for m in terms if m[2] and m[5]]
    while pending:
        m = pending.pop()
        coeff = terms.pop(m, None)
        if coeff is None:
            continue
        a1, a2, a3, b1, b2, b3 = m
        for target in (
            (a1 + 1, a2, a3 - 1, b1 + 1, b2, b3 - 1),
            (a1, a2 + 1, a3 - 1, b1, b2 + 1, b3 - 1),
        ):
            new = terms.get(target, 0) - coeff
            if new:
                terms[target] = new
                if target[2] and target[5]:
                    pending.append(target)
            else:
                terms.pop(target, None)
    return terms


class PolyVector:
    """Exact-rational vector over the canonical monomial basis.

    All stored monomials are canonical, share one bidegree, and carry a
    nonzero Fraction coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        deg = None
        for m, c in (terms or {}).items():
            if not c:
                continue
            if not is_canonical(m):
                raise ValueError(f"non-canonical monomial {m!r} in PolyVector")
            d = bidegree(m)
            if deg is None:
                deg = d
            elif d != deg:
                raise ValueError(f"mixed bidegrees {deg} and {d} in PolyVector")
            clean[m] = Fraction(c)
        self.terms = clean

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def bidegree(self) -> tuple[int, int] | None:
        for m in self.terms:
            return bidegree(m)
        return None

    def coefficient(self, m) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "PolyVector(0)"
        inner = " + ".join(f"{c}*{list(m)}" for m, c in sorted(self.terms.items()))
        return f"PolyVector({inner})"


def canonicalize(pairs) -> PolyVector:
    """Rewrite raw (monomial, coefficient) pairs into canonical form.

    All input monomials must share one bidegree; coefficients may be int or
    Fraction.  Terms with an x3*y3 factor are rewritten via the defining
    relation until none remain.
    """
    terms: dict[Monomial, Fraction] = {}
    deg = None
    for m, c in pairs:
        m = check_monomial(m)
        d = bidegree(m)
        if deg is None:
            deg = d
        elif d != deg:
            raise ValueError(f"mixed bidegrees {deg} and {d} in input")
        new = terms.get(m, 0) + Fraction(c)
        if new:
            terms[m] = new
        else:
            terms.pop(m, None)
    return PolyVector(_reduce_dict(terms))


def _first_order_terms(g: str, m: Monomial) -> list[tuple[Monomial, int]]:
    """Raw substitution-rule image of a generator on one monomial."""
    a1, a2, a3, b1, b2, b3 = m
    if g == "T3":
        c = -a1 + a3 + b1 - b3
        return [(m, c)] if c else []
    if g == "H2":
        c = -a2 + a3 + b2 - b3
        return [(m, c)] if c else []
    i, j = int(g[1]), int(g[2])
    out = []
    ai = m[i - 1]
    if ai:
        t = list(m)
        t[i - 1] -= 1
        t[j - 1] += 1
        out.append((tuple(t), -ai))
    bj = m[3 + j - 1]
    if bj:
        t = list(m)
        t[3 + j - 1] -= 1
        t[3 + i - 1] += 1
        out.append((tuple(t), bj))
    return out


def _apply_word(word, m: Monomial) -> dict[Monomial, int]:
    """Apply a generator word to a canonical monomial, rightmost factor first.

    Returns a canonical monomial -> integer coefficient dict (the action
    table and the rewriting rule are integer-valued).
    """
    current: dict[Monomial, int] = {m: 1}
    for g in reversed(word):
        image: dict[Monomial, int] = {}
        for mono, coeff in current.items():
            for target, factor in _first_order_terms(g, mono):
                new = image.get(target, 0) + coeff * factor
                if new:
                    image[target] = new
                else:
                    image.pop(target, None)
        current = _reduce_dict(image)
    return current


def apply_generator(g: str, m) -> PolyVector:
    """First-order action of a single generator, reduced to canonical form."""
    check_generator(g)
    m = check_monomial(m)
    if not is_canonical(m):
        raise ValueError(f"monomial {m!r} is not canonical")
    raw = _first_order_terms(g, m)
    return PolyVector(_reduce_dict(dict(raw)))


def apply_expr(expr: GeneratorExpr, m) -> PolyVector:
    """Action of an expression: word-by-word composition, then the linear
    combination.  Requires real coefficients (the realization is real)."""
    if not expr.has_real_coefficients:
        raise ConfigError(
            "matrix realization requires real coefficients; "
            "the expression has a non-real term"
        )
    m = check_monomial(m)
    if not is_canonical(m):
        raise ValueError(f"monomial {m!r} is not canonical")
    total: dict[Monomial, Fraction] = {}
    for word, coeff in expr.terms.items():
        c = coeff.re
        for target, factor in _apply_word(word, m).items():
            new = total.get(target, 0) + c * factor
            if new:
                total[target] = new
            else:
                total.pop(target, None)
    return PolyVector(total)


@dataclass
class SparseMatrix:
    """Column-major sparse matrix with exact rational entries.

    cols[j] lists (row, value) pairs with strictly increasing row indices
    and no zero values.
    """

    dim: int
    cols: list[list[tuple[int, Fraction]]]

    def nnz_per_column(self) -> list[int]:
        return [len(col) for col in self.cols]

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols)

    def max_abs_entry(self) -> Fraction:
        best = Fraction(0)
        for col in self.cols:
            for _, value in col:
                a = abs(value)
                if a > best:
                    best = a
        return best

    def is_diagonal(self) -> bool:
        return all(row == j for j, col in enumerate(self.cols) for row, _ in col)

    def diagonal(self) -> list[Fraction]:
        """Diagonal entries including implicit zeros (only meaningful when
        is_diagonal())."""
        out = [Fraction(0)] * self.dim
        for j, col in enumerate(self.cols):
            for row, value in col:
                if row == j:
                    out[j] = value
        return out

    def triplets(self) -> list[tuple[int, int, Fraction]]:
        return [(row, j, value) for j, col in enumerate(self.cols) for row, value in col]

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.dim, self.dim))
        for j, col in enumerate(self.cols):
            for row, value in col:
                dense[row, j] = float(value)
        return dense


def matrix_of(expr: GeneratorExpr, lam) -> SparseMatrix:
    """Matrix of an expression in the canonical monomial basis of lam.

    Column j holds the coordinates of the image of basis monomial j.
    """
    if not expr.has_real_coefficients:
        raise ConfigError(
            "matrix realization requires real coefficients; "
            "the expression has a non-real term"
        )
    monomials = basis(lam)
    index = {m: i for i, m in enumerate(monomials)}
    word_coeffs = [(word, coeff.re) for word, coeff in expr.terms.items()]
    cols = []
    for m in monomials:
        entries: dict[int, Fraction] = {}
        for word, c in word_coeffs:
            for target, factor in _apply_word(word, m).items():
                row = index[target]
                new = entries.get(row, 0) + c * factor
                if new:
                    entries[row] = new
                else:
                    entries.pop(row, None)
        cols.append(sorted(entries.items()))
    return SparseMatrix(len(monomials), cols)


def distinct_weight_count(lam, direction: str = "generic") -> int:
    """Number of distinct weight values over the basis of lam.

    direction "t3" or "h2" counts distinct single eigenvalues, "generic"
    counts distinct (t3, h2) pairs.
    """
    if direction not in ("t3", "h2", "generic"):
        raise ConfigError(f"unknown weight direction {direction!r}")
    seen = set()
    for m in basis(lam):
        w = weight_of(m)
        if direction == "t3":
            seen.add(w.t3)
        elif direction == "h2":
            seen.add(w.h2)
        else:
            seen.add(w)
    return len(seen)


# -- export formats ---------------------------------------------------------

def basis_json(lam) -> str:
    """JSON list of exponent vectors in basis order."""
    return json.dumps([list(m) for m in basis(lam)])


def matrix_json(matrix: SparseMatrix) -> str:
    """JSON {dim, triplets: [[row, col, value], ...]} in column-major order."""
    payload = {
        "dim": matrix.dim,
        "triplets": [[r, c, float(v)] for r, c, v in matrix.triplets()],
    }
    return json.dumps(payload)


def matrix_market(matrix: SparseMatrix) -> str:
    """MatrixMarket coordinate text (1-based indices, real general)."""
    lines = [
        "%%MatrixMarket matrix coordinate real general",
        f"{matrix.dim} {matrix.dim} {matrix.nnz()}",
    ]
    for r, c, v in matrix.triplets():
        lines.append(f"{r + 1} {c + 1} {float(v):.17g}")
    return "\n".join(lines) + "\n"
