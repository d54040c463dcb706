"""Normal-ordered polynomials in the sl3 generator basis.

Expressions are finite complex-linear combinations of words in the nine
generators S12, S13, S21, S23, S31, S32, T3, H2, where T3 = diag(1,0,-1),
H2 = diag(0,1,-1) and S_ij is the matrix unit with a single 1 at (i,j).
Words are stored exactly as written: there is no reordering across
non-commuting generators, so multiplication is plain word concatenation.

Coefficients are exact rational complex numbers.  An expression remembers
whether any coefficient entered through a float; the hermiticity test then
compares within 1e-12 instead of exactly.
"""

from __future__ import annotations

from fractions import Fraction

from . import rootsys
from .errors import ConfigError

GENERATORS = ("S12", "S13", "S21", "S23", "S31", "S32", "T3", "H2")

_CONJUGATE = {
    "S12": "S21", "S21": "S12",
    "S13": "S31", "S31": "S13",
    "S23": "S32", "S32": "S23",
    "T3": "T3", "H2": "H2",
}

Word = tuple[str, ...]


def check_generator(name: str) -> str:
    if name not in GENERATORS:
        raise ConfigError(f"unknown generator {name!r}; expected one of {GENERATORS}")
    return name


def defining_matrix(name: str):
    """3x3 defining matrix of a generator, as nested tuples of ints."""
    check_generator(name)
    if name == "T3":
        return ((1, 0, 0), (0, 0, 0), (0, 0, -1))
    if name == "H2":
        return ((0, 0, 0), (0, 1, 0), (0, 0, -1))
    i, j = int(name[1]) - 1, int(name[2]) - 1
    return tuple(
        tuple(1 if (r, c) == (i, j) else 0 for c in range(3)) for r in range(3)
    )


class CRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "CRational":
        return CRational(self.re, -self.im)

    def __add__(self, other: "CRational") -> "CRational":
        return CRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "CRational") -> "CRational":
        return CRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "CRational") -> "CRational":
        return CRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "CRational":
        return CRational(-self.re, -self.im)

    def scale(self, factor: Fraction) -> "CRational":
        return CRational(self.re * factor, self.im * factor)

    def max_abs(self) -> Fraction:
        return max(abs(self.re), abs(self.im))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"CRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce_coeff(value) -> tuple[CRational, bool]:
    """Normalize a scalar to CRational; second value is the exactness flag."""
    if isinstance(value, CRational):
        return value, True
    if isinstance(value, bool):
        raise ConfigError(f"cannot use {value!r} as a coefficient")
    if isinstance(value, (int, Fraction)):
        return CRational(value), True
    if isinstance(value, float):
        return CRational(Fraction(value)), False
    if isinstance(value, complex):
        return CRational(Fraction(value.real), Fraction(value.imag)), False
    raise ConfigError(f"cannot use {value!r} as a coefficient")


class GeneratorExpr:
    """Complex-linear combination of generator words.

    The term map sends each word (a tuple of generator names, kept in the
    order written) to its nonzero coefficient.  The empty word is the unit
    of the algebra, so scalars are expressions too.
    """

    __slots__ = ("terms", "exact")

    def __init__(self, terms: dict[Word, CRational] | None = None, exact: bool = True):
        clean: dict[Word, CRational] = {}
        if terms:
            for word, coeff in terms.items():
                if not coeff.is_zero:
                    clean[word] = coeff
        self.terms = clean
        self.exact = exact

    @classmethod
    def zero(cls) -> "GeneratorExpr":
        return cls()

    @classmethod
    def scalar(cls, value) -> "GeneratorExpr":
        coeff, exact = _coerce_coeff(value)
        return cls({(): coeff}, exact)

    @classmethod
    def word(cls, generators, coeff=1) -> "GeneratorExpr":
        w = tuple(check_generator(g) for g in generators)
        c, exact = _coerce_coeff(coeff)
        return cls({w: c}, exact)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Maximal word length, 0 for scalars and the zero expression."""
        return max((len(w) for w in self.terms), default=0)

    @property
    def has_real_coefficients(self) -> bool:
        return all(c.is_real for c in self.terms.values())

    @property
    def is_linear(self) -> bool:
        """True iff every word has length exactly 1 (zero expression excluded)."""
        return bool(self.terms) and all(len(w) == 1 for w in self.terms)

    def coefficient(self, word) -> CRational:
        return self.terms.get(tuple(word), CRational(0))

    def linear_part(self) -> "GeneratorExpr":
        return GeneratorExpr(
            {w: c for w, c in self.terms.items() if len(w) == 1}, self.exact
        )

    def dagger(self) -> "GeneratorExpr":
        """Anti-linear anti-involution: reverse words, conjugate everything."""
        out = {
            tuple(_CONJUGATE[g] for g in reversed(word)): coeff.conjugate()
            for word, coeff in self.terms.items()
        }
        return GeneratorExpr(out, self.exact)

    def __add__(self, other):
        if not isinstance(other, GeneratorExpr):
            return NotImplemented
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            c = terms.get(word)
            terms[word] = coeff if c is None else c + coeff
        return GeneratorExpr(terms, self.exact and other.exact)

    def __sub__(self, other):
        if not isinstance(other, GeneratorExpr):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return GeneratorExpr({w: -c for w, c in self.terms.items()}, self.exact)

    def __mul__(self, other):
        if isinstance(other, GeneratorExpr):
            terms: dict[Word, CRational] = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    word = w1 + w2
                    c = c1 * c2
                    prev = terms.get(word)
                    terms[word] = c if prev is None else prev + c
            return GeneratorExpr(terms, self.exact and other.exact)
        coeff, exact = _coerce_coeff(other)
        return GeneratorExpr(
            {w: c * coeff for w, c in self.terms.items()}, self.exact and exact
        )

    def __rmul__(self, other):
        # scalar coefficients commute, so left and right scaling agree
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ConfigError(f"exponent must be a non-negative integer, got {n!r}")
        out = GeneratorExpr.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GeneratorExpr):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            coeff = self.terms[word]
            if word:
                parts.append(f"({coeff})*{'*'.join(word)}")
            else:
                parts.append(f"({coeff})")
        return " + ".join(parts)


def gen(name: str) -> GeneratorExpr:
    """Degree-1 expression for a single generator."""
    return GeneratorExpr.word((name,))


S12 = gen("S12")
S13 = gen("S13")
S21 = gen("S21")
S23 = gen("S23")
S31 = gen("S31")
S32 = gen("S32")
T3 = gen("T3")
H2 = gen("H2")


def dagger(expr: GeneratorExpr) -> GeneratorExpr:
    return expr.dagger()


def is_abstract_hermitian(expr: GeneratorExpr, tol: float | None = None) -> bool:
    """True iff expr equals its dagger image.

    Exact comparison for expressions built from rationals; within `tol`
    (default 1e-12) per coefficient once a float entered the expression.
    """
    diff = expr - expr.dagger()
    if tol is None:
        tol = 0 if expr.exact else 1e-12
    if tol == 0:
        return diff.is_zero
    return all(c.max_abs() <= tol for c in diff.terms.values())


def rescale(expr: GeneratorExpr, s: int) -> GeneratorExpr:
    """Substitute g -> g/s for every generator, i.e. scale each word of
    length d by s**(-d)."""
    if not isinstance(s, int) or s < 1:
        raise ConfigError(f"rescaling factor must be a positive integer, got {s!r}")
    if s == 1:
        return expr
    terms = {
        word: coeff.scale(Fraction(1, s ** len(word)))
        for word, coeff in expr.terms.items()
    }
    return GeneratorExpr(terms, expr.exact)


def _ceil_power(k: int, p: Fraction) -> int:
    """Exact ceil(k**p) for integer k >= 1 and rational p >= 0."""
    num, den = p.numerator, p.denominator
    target = k ** num
    if den == 1:
        return target
    # smallest m with m**den >= target; start from the float guess and fix up
    m = max(1, int(round(target ** (1.0 / den))))
    while m ** den >= target:
        m -= 1
    while m ** den < target:
        m += 1
    return m


def scaling_sequence(scheme: str, lam, k: int, power=None) -> int:
    """Rescaling factor s_k for a ray through lam.

    Schemes: "none" (s_k = 1), "parameter" (s_k = k), "dimension"
    (s_k = dim of the k-th representation on the ray), "power" (s_k =
    ceil(k**power)).  By convention s_0 = 1 for every scheme.
    """
    lam = rootsys.check_weight(lam)
    if not isinstance(k, int) or k < 0:
        raise ConfigError(f"ray parameter must be a non-negative integer, got {k!r}")
    if scheme == "none":
        return 1
    if scheme == "parameter":
        return k if k >= 1 else 1
    if scheme == "dimension":
        return rootsys.weyl_dim(rootsys.ray_weight(lam, k))
    if scheme == "power":
        if power is None:
            raise ConfigError("power scaling needs an exponent, e.g. power:2")
        p = Fraction(power)
        if p < 0:
            raise ConfigError(f"power exponent must be >= 0, got {power!r}")
        if k == 0:
            return 1
        return max(1, _ceil_power(k, p))
    raise ConfigError(f"unknown scaling scheme {scheme!r}")


def lipkin_hamiltonian(a, b) -> GeneratorExpr:
    """a*T3 + b*(sum of all six S_ij^2), the three-level Lipkin operator."""
    quadratic = GeneratorExpr.zero()
    for name in ("S12", "S13", "S21", "S23", "S31", "S32"):
        quadratic = quadratic + gen(name) ** 2
    return a * T3 + b * quadratic
