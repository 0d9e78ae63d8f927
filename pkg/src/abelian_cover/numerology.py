"""Closed-form invariants of generic projections, deformation classes and homeotopy groups."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import sympy as sp

from .errors import NumerologyError
from .models import BranchCurveData, NumerologyReport

PRINTED_K_SQUARED = (333, 9)


@dataclass(frozen=True)
class SeedSurface:
    """A rigid surface used as a building block for products."""

    name: str
    k_squared: int
    euler: int
    pg: int
    q: int

    @property
    def chi_holo(self) -> int:
        return (self.k_squared + self.euler) // 12


MIYAOKA_YAU = SeedSurface(name="ceva_cover", k_squared=333, euler=111, pg=36, q=0)
FAKE_PROJECTIVE_PLANE = SeedSurface(
    name="fake_projective_plane", k_squared=9, euler=3, pg=0, q=0
)


def general_cusp_count(k2: int, euler: int, m: int) -> int:
    """Cusps of the branch curve of a generic projection by L = mK:
    12 L^2 + 9 L.K + 2 K^2 - e."""
    return 12 * m * m * k2 + 9 * m * k2 + 2 * k2 - euler


def embedding_dimension(k2: int, m: int) -> int | None:
    """r_m = h^0(mK) - 1 = chi + m(m - 1) K^2 / 2 - 1, taking chi = K^2 / 9.

    None when K^2 / 9 is not an integer.
    """
    if m < 2:
        raise NumerologyError(f"Pluricanonical index must be at least 2, got {m}")
    chi = Fraction(k2, 9)
    if chi.denominator != 1:
        return None
    return chi.numerator + m * (m - 1) * k2 // 2 - 1


def branch_curve_invariants(k_squared: int, m: int) -> BranchCurveData:
    """Degree of f_m, degree, genus, cusps and nodes of its branch curve for L = mK."""
    if m < 5:
        raise NumerologyError(f"m must be at least 5 for mK to embed, got {m}")
    if k_squared <= 0:
        raise NumerologyError(f"K^2 must be positive, got {k_squared}")
    if (k_squared * (3 * m + 2) * (3 * m + 1)) % 2:
        raise NumerologyError("Genus K^2 (3m+2)(3m+1)/2 + 1 is not integral")
    if k_squared % 3:
        raise NumerologyError(f"Cusp count needs 3 | K^2, got K^2 = {k_squared}")

    degree = k_squared * m * (3 * m + 1)
    genus = k_squared * (3 * m + 2) * (3 * m + 1) // 2 + 1
    cusps = k_squared // 3 * (36 * m * m + 27 * m + 5)
    nodes = (degree - 1) * (degree - 2) // 2 - genus - cusps
    if nodes < 0:
        raise NumerologyError(f"Negative node count {nodes} for K^2 = {k_squared}, m = {m}")

    return BranchCurveData(
        k_squared=k_squared,
        m=m,
        covering_degree=k_squared * m * m,
        curve_degree=degree,
        geometric_genus=genus,
        cusp_count=cusps,
        node_count=nodes,
        embedding_dimension=embedding_dimension(k_squared, m),
        extrapolated=k_squared not in PRINTED_K_SQUARED,
    )


def branch_curve_polynomials(k_squared: int) -> dict[str, sp.Expr]:
    """The same invariants as polynomials in a symbol m."""
    m = sp.symbols("m", integer=True, positive=True)
    k2 = sp.Integer(k_squared)
    degree = k2 * m * (3 * m + 1)
    genus = k2 * (3 * m + 2) * (3 * m + 1) / 2 + 1
    cusps = k2 / 3 * (36 * m**2 + 27 * m + 5)
    return {
        "covering_degree": sp.expand(k2 * m**2),
        "curve_degree": sp.expand(degree),
        "geometric_genus": sp.expand(genus),
        "cusp_count": sp.expand(cusps),
        "node_count": sp.expand((degree - 1) * (degree - 2) / 2 - genus - cusps),
    }


def cusp_formula_holds(k_squared: int) -> bool:
    """The printed cusp form agrees with 12L^2 + 9LK + 2K^2 - e when e = K^2/3."""
    m = sp.symbols("m", integer=True, positive=True)
    k2 = sp.Integer(k_squared)
    general = 12 * m**2 * k2 + 9 * m * k2 + 2 * k2 - k2 / 3
    printed = branch_curve_polynomials(k_squared)["cusp_count"]
    return sp.expand(general - printed) == 0


def deformation_class_count(n: int) -> int:
    """([n/4] + 1)([n/2] - [n/4] + 1) components in complex dimension n."""
    if n < 2:
        raise NumerologyError(f"Complex dimension must be at least 2, got {n}")
    return (n // 4 + 1) * (n // 2 - n // 4 + 1)


def product_class_count(m: int, n: int) -> int:
    """(m + 1)(n + 1) classes on a product of m and n copies of two seed surfaces."""
    if m < 0 or n < 0:
        raise NumerologyError("Factor counts must be non-negative")
    return (m + 1) * (n + 1)


def self_conjugate_classes(m: int, n: int) -> list[tuple[int, int]]:
    """Classes X_{p,q} with conj(X_{p,q}) = X_{m-p,n-q} = X_{p,q}."""
    if m < 0 or n < 0:
        raise NumerologyError("Factor counts must be non-negative")
    if m % 2 or n % 2:
        return []
    return [(m // 2, n // 2)]


def homeotopy_order(n: int, deck_order: int = 25) -> int:
    """|G^n x| S_n| for the n-fold self-product of a surface with deck group G."""
    if n < 1:
        raise NumerologyError(f"Number of factors must be at least 1, got {n}")
    return deck_order**n * factorial(n)


def default_factors(dimension: int) -> tuple[int, int]:
    """Factor counts realizing the component bound in a given complex dimension."""
    return dimension // 4, dimension // 2 - dimension // 4


def numerology_report(
    k_squared: int = MIYAOKA_YAU.k_squared,
    m_values: tuple[int, ...] = (5,),
    dimension: int = 2,
    factors: tuple[int, int] | None = None,
    deck_order: int = 25,
) -> NumerologyReport:
    first, second = factors if factors is not None else default_factors(dimension)
    return NumerologyReport(
        branch_curves=[branch_curve_invariants(k_squared, m) for m in m_values],
        dimension=dimension,
        deformation_classes=deformation_class_count(dimension),
        homeotopy_order=homeotopy_order(max(dimension // 2, 1), deck_order),
        product_classes=product_class_count(first, second),
        self_conjugate_classes=[list(pair) for pair in self_conjugate_classes(first, second)],
    )
