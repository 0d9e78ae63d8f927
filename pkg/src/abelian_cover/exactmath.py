"""Exact arithmetic in Q and Q(mu), mu^2 = mu - 1, with bivariate polynomials and
matrix rank/kernel computation.

Every geometric coefficient in the toolkit lives in Q(mu). Nothing in this module
uses floating point.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Union

# Rational base field. Fraction keeps gcd(|num|, den) = 1 and den >= 1.
RatNum = Fraction

Scalar = Union[int, Fraction, "CycloNum"]

# Degree reported for the zero polynomial.
ZERO_DEGREE = -1


def _rat(value: int | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True, slots=True)
class CycloNum:
    """Element a + b*mu of Q(mu), where mu = exp(i*pi/3) satisfies mu^2 = mu - 1."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _rat(self.a))
        object.__setattr__(self, "b", _rat(self.b))

    @classmethod
    def coerce(cls, value: Scalar) -> CycloNum:
        if isinstance(value, CycloNum):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(Fraction(value))
        raise TypeError(f"Cannot interpret {value!r} as an element of Q(mu)")

    @classmethod
    def mu(cls) -> CycloNum:
        return cls(Fraction(0), Fraction(1))

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def norm(self) -> Fraction:
        """Field norm N(a + b*mu) = a^2 + a*b + b^2."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def conjugate(self) -> CycloNum:
        # mu -> 1 - mu
        return CycloNum(self.a + self.b, -self.b)

    def inverse(self) -> CycloNum:
        norm = self.norm()
        if norm == 0:
            raise ZeroDivisionError("Division by zero in Q(mu)")
        conj = self.conjugate()
        return CycloNum(conj.a / norm, conj.b / norm)

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.a, self.b)

    def __add__(self, other: Scalar) -> CycloNum:
        o = CycloNum.coerce(other)
        return CycloNum(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> CycloNum:
        o = CycloNum.coerce(other)
        return CycloNum(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: Scalar) -> CycloNum:
        return CycloNum.coerce(other) - self

    def __neg__(self) -> CycloNum:
        return CycloNum(-self.a, -self.b)

    def __mul__(self, other: Scalar) -> CycloNum:
        o = CycloNum.coerce(other)
        bd = self.b * o.b
        return CycloNum(self.a * o.a - bd, self.a * o.b + self.b * o.a + bd)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> CycloNum:
        return self * CycloNum.coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> CycloNum:
        return CycloNum.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> CycloNum:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycloNum):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycloNum({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        magnitude = abs(self.b)
        mu_part = "mu" if magnitude == 1 else f"{magnitude}*mu"
        if self.a == 0:
            return mu_part if self.b > 0 else f"-{mu_part}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{mu_part}"


ZERO = CycloNum()
ONE = CycloNum(Fraction(1))
MU = CycloNum.mu()


def cyclo_mul(x: CycloNum, y: CycloNum) -> CycloNum:
    """Product in Q(mu) reduced to canonical a + b*mu form."""
    return x * y


def cyclo_inv(x: CycloNum) -> CycloNum:
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return x.inverse()


def cyclo_conj(x: CycloNum) -> CycloNum:
    """Complex conjugation, the automorphism mu -> 1 - mu."""
    return x.conjugate()


Monomial = tuple[int, int]


def _powers(value: CycloNum, top: int) -> list[CycloNum]:
    powers = [ONE]
    for _ in range(top):
        powers.append(powers[-1] * value)
    return powers


class BiPoly:
    """Sparse polynomial in x, y with coefficients in Q(mu)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None) -> None:
        cleaned: dict[Monomial, CycloNum] = {}
        for (i, j), coeff in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent in monomial {(i, j)}")
            value = CycloNum.coerce(coeff)
            if not value.is_zero():
                cleaned[(i, j)] = value
        self._terms = cleaned

    @classmethod
    def constant(cls, value: Scalar) -> BiPoly:
        return cls({(0, 0): value})

    @classmethod
    def linear(cls, cx: Scalar, cy: Scalar, c0: Scalar) -> BiPoly:
        """The affine form cx*x + cy*y + c0."""
        return cls({(1, 0): cx, (0, 1): cy, (0, 0): c0})

    @staticmethod
    def monomials(degree: int) -> list[Monomial]:
        """All monomials of total degree <= degree, ordered by degree then x-power."""
        return [
            (total - j, j) for total in range(degree + 1) for j in range(total + 1)
        ]

    @property
    def terms(self) -> dict[Monomial, CycloNum]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        if not self._terms:
            return ZERO_DEGREE
        return max(i + j for i, j in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, i: int, j: int) -> CycloNum:
        return self._terms.get((i, j), ZERO)

    def __iter__(self) -> Iterator[tuple[Monomial, CycloNum]]:
        return iter(sorted(self._terms.items()))

    def __add__(self, other: BiPoly | Scalar) -> BiPoly:
        o = other if isinstance(other, BiPoly) else BiPoly.constant(other)
        result = dict(self._terms)
        for mono, coeff in o._terms.items():
            result[mono] = result.get(mono, ZERO) + coeff
        return BiPoly(result)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: BiPoly | Scalar) -> BiPoly:
        o = other if isinstance(other, BiPoly) else BiPoly.constant(other)
        return self + (-o)

    def __mul__(self, other: BiPoly | Scalar) -> BiPoly:
        if not isinstance(other, BiPoly):
            scalar = CycloNum.coerce(other)
            return BiPoly({mono: coeff * scalar for mono, coeff in self._terms.items()})
        result: dict[Monomial, CycloNum] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, ZERO) + c1 * c2
        return BiPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> BiPoly:
        if exponent < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = BiPoly.constant(ONE)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, CycloNum)):
            return self == BiPoly.constant(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, x: Scalar, y: Scalar) -> CycloNum:
        xv, yv = CycloNum.coerce(x), CycloNum.coerce(y)
        total = ZERO
        for (i, j), coeff in self._terms.items():
            total = total + coeff * xv**i * yv**j
        return total

    def _point_powers(
        self, a: Scalar, b: Scalar
    ) -> tuple[list[CycloNum], list[CycloNum]]:
        av, bv = CycloNum.coerce(a), CycloNum.coerce(b)
        top_x = max((i for i, _ in self._terms), default=0)
        top_y = max((j for _, j in self._terms), default=0)
        return _powers(av, top_x), _powers(bv, top_y)

    def shift(self, a: Scalar, b: Scalar) -> BiPoly:
        """The polynomial p(x + a, y + b), expanded exactly."""
        apow, bpow = self._point_powers(a, b)
        result: dict[Monomial, CycloNum] = {}
        for (i, j), coeff in self._terms.items():
            for alpha in range(i + 1):
                x_part = coeff * comb(i, alpha) * apow[i - alpha]
                for beta in range(j + 1):
                    key = (alpha, beta)
                    term = x_part * comb(j, beta) * bpow[j - beta]
                    result[key] = result.get(key, ZERO) + term
        return BiPoly(result)

    def taylor_coefficients(self, a: Scalar, b: Scalar, order: int) -> list[CycloNum]:
        """Coefficients of p(x + a, y + b) of total degree < order.

        Listed by total degree, then by decreasing x-power within a degree.
        """
        apow, bpow = self._point_powers(a, b)
        coefficients = []
        for total in range(order):
            for beta in range(total + 1):
                alpha = total - beta
                value = ZERO
                for (i, j), coeff in self._terms.items():
                    if i >= alpha and j >= beta:
                        scale = comb(i, alpha) * comb(j, beta)
                        value = value + coeff * scale * apow[i - alpha] * bpow[j - beta]
                coefficients.append(value)
        return coefficients

    def vanishes_to(self, a: Scalar, b: Scalar, order: int) -> bool:
        """True when the vanishing order at (a, b) is at least ``order``."""
        return all(v.is_zero() for v in self.taylor_coefficients(a, b, order))

    def order_at(self, a: Scalar, b: Scalar) -> int | None:
        """Vanishing order at (a, b); None for the zero polynomial."""
        shifted = self.shift(a, b)
        if shifted.is_zero():
            return None
        return min(i + j for i, j in shifted._terms)

    def leading_coefficient(self) -> CycloNum:
        if not self._terms:
            return ZERO
        return self._terms[max(self._terms)]

    def is_proportional(self, other: BiPoly) -> bool:
        """True when self = c * other for a nonzero constant c."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self._terms) != set(other._terms):
            return False
        ratio = self.leading_coefficient() / other.leading_coefficient()
        return all(self._terms[m] == ratio * other._terms[m] for m in self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{mono}: {coeff}" for mono, coeff in self)
        return f"BiPoly({{{body}}})"


@dataclass(frozen=True)
class ExactMatrix:
    """Rectangular matrix over Q(mu)."""

    entries: tuple[tuple[CycloNum, ...], ...]
    cols: int = field(default=-1)

    def __post_init__(self) -> None:
        rows = tuple(tuple(CycloNum.coerce(v) for v in row) for row in self.entries)
        width = len(rows[0]) if rows else max(self.cols, 0)
        if self.cols >= 0 and rows and self.cols != width:
            raise ValueError(f"Declared {self.cols} columns but rows have {width}")
        if any(len(row) != width for row in rows):
            raise ValueError("Matrix rows must all have the same length")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "cols", width)

    @classmethod
    def from_rows(
        cls, rows: Iterable[Sequence[Scalar]], cols: int = -1
    ) -> ExactMatrix:
        return cls(tuple(tuple(CycloNum.coerce(v) for v in row) for row in rows), cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        return cls(tuple(tuple(ZERO for _ in range(cols)) for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @property
    def rows(self) -> int:
        return len(self.entries)

    def apply(self, vector: Sequence[Scalar]) -> tuple[CycloNum, ...]:
        if len(vector) != self.cols:
            raise ValueError("Vector length does not match column count")
        vec = [CycloNum.coerce(v) for v in vector]
        return tuple(
            sum((entry * v for entry, v in zip(row, vec, strict=True)), ZERO)
            for row in self.entries
        )

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            tuple(tuple(self.entries[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.rows,
        )

    def det(self) -> CycloNum:
        if self.rows != self.cols:
            raise ValueError("Determinant needs a square matrix")
        if self.rows == 0:
            return ONE
        reduced, pivots, swaps = _bareiss(self)
        if len(pivots) < self.rows:
            return ZERO
        last = reduced[-1][-1]
        return -last if swaps % 2 else last

    def inverse(self) -> ExactMatrix:
        """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
        n = self.rows
        if n != self.cols:
            raise ValueError("Only square matrices can be inverted")
        work = [list(row) + [ONE if i == j else ZERO for j in range(n)]
                for i, row in enumerate(self.entries)]
        for c in range(n):
            pivot = next((r for r in range(c, n) if not work[r][c].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("Matrix is singular")
            work[c], work[pivot] = work[pivot], work[c]
            inv = work[c][c].inverse()
            work[c] = [v * inv for v in work[c]]
            for r in range(n):
                if r != c and not work[r][c].is_zero():
                    factor = work[r][c]
                    work[r] = [v - factor * w for v, w in zip(work[r], work[c], strict=True)]
        return ExactMatrix(tuple(tuple(row[n:]) for row in work), n)


def _bareiss(m: ExactMatrix) -> tuple[list[list[CycloNum]], list[int], int]:
    """Fraction-free forward elimination.

    Returns the echelon rows, pivot columns and the number of row swaps. Each
    update divides by the previous pivot, which keeps entries equal to minors
    of the input instead of letting them grow.
    """
    work = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    swaps = 0
    previous = ONE
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if not work[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        if pivot_row != r:
            work[r], work[pivot_row] = work[pivot_row], work[r]
            swaps += 1
        pivot = work[r][c]
        for i in range(r + 1, nrows):
            lead = work[i][c]
            for j in range(c + 1, ncols):
                work[i][j] = (pivot * work[i][j] - lead * work[r][j]) / previous
            work[i][c] = ZERO
        previous = pivot
        pivots.append(c)
        r += 1
    return work, pivots, swaps


def matrix_rank_kernel(m: ExactMatrix) -> tuple[int, list[tuple[CycloNum, ...]]]:
    """Exact rank and a kernel basis of m.

    Kernel vectors are built by back-substitution from the fraction-free echelon
    form, one per free column, so rank + len(kernel) == m.cols.
    """
    echelon, pivots, _ = _bareiss(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    kernel: list[tuple[CycloNum, ...]] = []
    for free_col in free:
        x = [ZERO] * m.cols
        x[free_col] = ONE
        for k in reversed(range(len(pivots))):
            pc = pivots[k]
            row = echelon[k]
            acc = ZERO
            for j in range(pc + 1, m.cols):
                if not row[j].is_zero() and not x[j].is_zero():
                    acc = acc + row[j] * x[j]
            x[pc] = -acc / row[pc]
        kernel.append(tuple(x))
    return len(pivots), kernel


def cross(u: Sequence[CycloNum], v: Sequence[CycloNum]) -> tuple[CycloNum, ...]:
    """Cross product of two 3-vectors over Q(mu)."""
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def normalize_leading(vector: Sequence[Scalar]) -> tuple[CycloNum, ...]:
    """Scale a nonzero vector so that its first nonzero entry is 1."""
    values = tuple(CycloNum.coerce(v) for v in vector)
    lead = next((v for v in values if not v.is_zero()), None)
    if lead is None:
        raise ValueError("Cannot normalize the zero vector")
    inv = lead.inverse()
    return tuple(v * inv for v in values)
