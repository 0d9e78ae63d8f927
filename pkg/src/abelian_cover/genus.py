"""Geometric genus of abelian covers by reduction to cyclic quotients.

For a cyclic quotient z^p = prod h_i^{k_i}, regular 2-forms are written as
(sum_j z^j g_j(x, y)) dx^dy / z^{p-1}. Each g_j is constrained by a degree
bound, divisibility by the branch lines and a vanishing order at the singular
points of the branch curve; the dimension of each eigenspace is the kernel
dimension of the exact linear system those constraints impose.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd

from .arrangement import Arrangement, IntersectionPoint, ProjLine, multiple_points
from .chern import cover_invariants
from .cover import CharacterMap, CharacterRow, SubgroupFamily, quotient_rows, require_valid
from .errors import ChartError
from .exactmath import BiPoly, CycloNum, ExactMatrix, Scalar, matrix_rank_kernel
from .models import BoundTable, GenusReport, QuotientGenus, TableCell
from .reference import (
    PRINTED_DEGREE_TABLE,
    PRINTED_DIVISIBILITY_TABLE,
    PRINTED_POINT_TABLE,
)
from .utils.formatting import format_bipoly, format_product

AffinePoint = tuple[CycloNum, CycloNum]


def _ceil_div(numerator: int, denominator: int) -> int:
    return -((-numerator) // denominator)


def degree_bound(p: int, n: int, j: int) -> int:
    """d_j = (p - j - 1) n - 3; negative means the eigenspace is zero."""
    return (p - j - 1) * n - 3


def divisibility_order(p: int, k: int, j: int) -> int:
    """Smallest r >= 0 with p r >= (p - j - 1) k - p + 1."""
    return max(0, _ceil_div((p - j - 1) * k - p + 1, p))


def point_order(p: int, r: int, j: int) -> int:
    """Smallest s >= 0 with p s >= (p - j - 1) r - 2p + 1."""
    return max(0, _ceil_div((p - j - 1) * r - 2 * p + 1, p))


@dataclass(frozen=True)
class AffineChart:
    """Affine coordinates x = X1/X0, y = X2/X0 after sending a line to X0 = 0.

    ``transform`` is the unimodular-up-to-scalar change X = M P whose first row is
    the infinity line; points on that line have no affine coordinates.
    """

    infinity_line: ProjLine
    transform: ExactMatrix
    line_forms: dict[int, BiPoly]
    point_coordinates: dict[frozenset[int], AffinePoint | None]

    def affine_point(self, point: IntersectionPoint) -> AffinePoint:
        coords = self.point_coordinates[point.labels]
        if coords is None:
            raise ChartError(
                f"Singular point {point.name} lies on the line at infinity "
                f"{describe_line(self.infinity_line)}"
            )
        return coords

    def describe(self) -> str:
        return describe_line(self.infinity_line)


def describe_line(line: ProjLine) -> str:
    terms = []
    for coeff, var in zip(line.coefficients, ("x1", "x2", "x3"), strict=True):
        if coeff.is_zero():
            continue
        if coeff == 1:
            terms.append(var)
        elif coeff.is_rational():
            terms.append(f"{coeff}*{var}")
        else:
            terms.append(f"({coeff})*{var}")
    return " + ".join(terms).replace("+ -", "- ")


def _completion(infinity: Sequence[CycloNum]) -> ExactMatrix:
    # Complete the infinity row with two standard basis rows, dropping a
    # coordinate where the row is 1 when possible.
    skip = next((k for k, v in enumerate(infinity) if v == 1), None)
    if skip is None:
        skip = next(k for k, v in enumerate(infinity) if not v.is_zero())
    rows = [tuple(infinity)]
    for k in range(3):
        if k != skip:
            rows.append(tuple(CycloNum.coerce(1 if i == k else 0) for i in range(3)))
    return ExactMatrix.from_rows(rows)


def make_chart(arr: Arrangement, coefficients: Sequence[Scalar]) -> AffineChart:
    """Chart with the given line at infinity.

    Raises ChartError when the line is an arrangement line or passes through a
    multiple point. Double points at infinity are allowed here and rejected
    later only if they are singular points of some quotient's branch curve.
    """
    infinity = ProjLine.from_coefficients(coefficients, 0)
    for line in arr.lines:
        if infinity.is_proportional(line):
            raise ChartError(f"Line at infinity coincides with {line.name}")
    for point in multiple_points(arr):
        if infinity.contains(point.point):
            raise ChartError(f"Line at infinity passes through {point.name}")

    transform = _completion(infinity.coefficients)
    inverse_t = transform.inverse().transpose()

    line_forms = {}
    for line in arr.lines:
        d0, d1, d2 = inverse_t.apply(line.coefficients)
        line_forms[line.label] = BiPoly.linear(d1, d2, d0)

    point_coordinates: dict[frozenset[int], AffinePoint | None] = {}
    for point in arr.points:
        x0, x1, x2 = transform.apply(point.point.coordinates)
        point_coordinates[point.labels] = None if x0.is_zero() else (x1 / x0, x2 / x0)

    return AffineChart(
        infinity_line=infinity,
        transform=transform,
        line_forms=line_forms,
        point_coordinates=point_coordinates,
    )


def _chart_candidates(bound: int) -> Iterable[tuple[int, int, int]]:
    for coeffs in product(range(bound + 1), repeat=3):
        if any(coeffs) and gcd(*coeffs) == 1:
            yield coeffs


def choose_chart(arr: Arrangement, bound: int = 7, seed: int = 0) -> AffineChart:
    """The seed-th line a x1 + b x2 + c x3 (0 <= a, b, c <= bound, lexicographic)
    that is no arrangement line and misses every intersection point."""
    found = 0
    for coeffs in _chart_candidates(bound):
        line = ProjLine.from_coefficients(coeffs, 0)
        if any(line.is_proportional(other) for other in arr.lines):
            continue
        if any(line.contains(point.point) for point in arr.points):
            continue
        if found == seed:
            return make_chart(arr, coeffs)
        found += 1
    raise ChartError(
        f"Only {found} valid infinity lines with coefficients <= {bound}; "
        f"chart seed {seed} is out of range"
    )


@dataclass(frozen=True)
class SingularPoint:
    point: IntersectionPoint
    branch_labels: tuple[int, ...]
    weight: int


@dataclass(frozen=True)
class CyclicCoverData:
    """The cyclic quotient z^p = prod h_i^{k_i} defined by one character row."""

    row: CharacterRow
    branch_lines: tuple[int, ...]
    n: int
    singular_points: tuple[SingularPoint, ...]

    @property
    def p(self) -> int:
        return self.row.p

    def k(self, label: int) -> int:
        return self.row.weight(label)


def cyclic_cover_data(arr: Arrangement, row: CharacterRow) -> CyclicCoverData:
    branch = row.branch_labels()
    singular = []
    for point in arr.points:
        on_branch = tuple(label for label in point.sorted_labels if label in branch)
        if len(on_branch) >= 2:
            singular.append(
                SingularPoint(point, on_branch, sum(row.weight(i) for i in on_branch))
            )
    return CyclicCoverData(
        row=row, branch_lines=branch, n=row.n, singular_points=tuple(singular)
    )


@dataclass(frozen=True)
class EigenspaceSpec:
    j: int
    degree_bound: int
    divisibility: dict[int, int]
    point_orders: dict[frozenset[int], int]

    @property
    def residual_degree(self) -> int:
        return self.degree_bound - sum(self.divisibility.values())


def eigenspace_spec(data: CyclicCoverData, j: int) -> EigenspaceSpec:
    p = data.p
    if not 0 <= j < p:
        raise ValueError(f"Eigenspace index j = {j} outside 0..{p - 1}")
    return EigenspaceSpec(
        j=j,
        degree_bound=degree_bound(p, data.n, j),
        divisibility={
            label: divisibility_order(p, data.k(label), j) for label in data.branch_lines
        },
        point_orders={
            sp.point.labels: point_order(p, sp.weight, j) for sp in data.singular_points
        },
    )


@dataclass
class EigenspaceResult:
    spec: EigenspaceSpec
    dimension: int
    residual_basis: list[BiPoly] = field(default_factory=list)
    forms: list[BiPoly] = field(default_factory=list)


def _residual_orders(
    data: CyclicCoverData, spec: EigenspaceSpec
) -> list[tuple[SingularPoint, int]]:
    orders = []
    for sp in data.singular_points:
        sigma = spec.point_orders[sp.point.labels] - sum(
            spec.divisibility[label] for label in sp.branch_labels
        )
        if sigma > 0:
            orders.append((sp, sigma))
    return orders


def _prefactor(chart: AffineChart, spec: EigenspaceSpec) -> BiPoly:
    result = BiPoly.constant(1)
    for label, power in sorted(spec.divisibility.items()):
        if power:
            result = result * chart.line_forms[label] ** power
    return result


def eigenspace_dimension(
    arr: Arrangement, chart: AffineChart, data: CyclicCoverData, j: int
) -> EigenspaceResult:
    """Dimension and basis of the j-th eigenspace of regular 2-forms.

    g_j = prod h_i^{r_{j,i}} * g with deg g <= d_j - sum r_{j,i}; at each singular
    point the residual g must vanish to order s_{j,P} - sum_{i on P} r_{j,i},
    imposed as vanishing Taylor coefficients after shifting P to the origin.
    """
    spec = eigenspace_spec(data, j)
    degree = spec.residual_degree
    if degree < 0:
        return EigenspaceResult(spec=spec, dimension=0)

    monomials = BiPoly.monomials(degree)
    conditions: list[list[CycloNum]] = []
    for sp, sigma in _residual_orders(data, spec):
        a, b = chart.affine_point(sp.point)
        columns = [BiPoly({mono: 1}).taylor_coefficients(a, b, sigma) for mono in monomials]
        conditions.extend([list(row) for row in zip(*columns, strict=True)])

    if conditions:
        _, kernel = matrix_rank_kernel(ExactMatrix.from_rows(conditions, len(monomials)))
    else:
        kernel = [
            tuple(CycloNum.coerce(1 if i == k else 0) for i in range(len(monomials)))
            for k in range(len(monomials))
        ]

    residual = [
        BiPoly(dict(zip(monomials, vector, strict=True))) for vector in kernel
    ]
    prefactor = _prefactor(chart, spec)
    return EigenspaceResult(
        spec=spec,
        dimension=len(kernel),
        residual_basis=residual,
        forms=[prefactor * g for g in residual],
    )


def cyclic_pg(arr: Arrangement, chart: AffineChart, data: CyclicCoverData) -> int:
    return sum(eigenspace_dimension(arr, chart, data, j).dimension for j in range(data.p))


def verify_basis(chart: AffineChart, data: CyclicCoverData, result: EigenspaceResult) -> bool:
    """Re-check every returned form against the degree, divisibility and vanishing orders.

    A form is the prefactor times its residual, so its order at a point is the
    total power of prefactor lines through the point plus the residual's order.
    """
    spec = result.spec
    if not len(result.forms) == len(result.residual_basis) == result.dimension:
        return False
    prefactor = _prefactor(chart, spec)
    for g, form in zip(result.residual_basis, result.forms, strict=True):
        if g.is_zero() or form.degree > spec.degree_bound or prefactor * g != form:
            return False
        for sp in data.singular_points:
            a, b = chart.affine_point(sp.point)
            through = sum(
                power
                for label, power in spec.divisibility.items()
                if power and chart.line_forms[label].evaluate(a, b).is_zero()
            )
            needed = spec.point_orders[sp.point.labels] - through
            if needed > 0 and not g.vanishes_to(a, b, needed):
                return False
    return True


def format_form(spec: EigenspaceSpec, residual: BiPoly) -> str:
    """Render g_j as a product of line forms times its residual, e.g. "l4*l5*(x - y)"."""
    lines = format_product(spec.divisibility)
    if residual.degree == 0:
        return lines
    body = f"({format_bipoly(residual)})"
    return body if lines == "1" else f"{lines}*{body}"


RowResults = dict[tuple[int, ...], list[EigenspaceResult]]


def row_eigenspaces(
    arr: Arrangement,
    chart: AffineChart,
    row: CharacterRow,
    pool: ThreadPoolExecutor | None = None,
) -> list[EigenspaceResult]:
    """All p eigenspaces of the cyclic quotient defined by one row."""
    data = cyclic_cover_data(arr, row)
    js = range(data.p)
    if pool is None:
        return [eigenspace_dimension(arr, chart, data, j) for j in js]
    futures = [pool.submit(eigenspace_dimension, arr, chart, data, j) for j in js]
    return [future.result() for future in futures]


def _quotient(
    arr: Arrangement,
    chart: AffineChart,
    family: SubgroupFamily,
    with_forms: bool,
    pool: ThreadPoolExecutor | None,
    computed: RowResults | None,
) -> QuotientGenus:
    row = family.canonical_row
    results = row_eigenspaces(arr, chart, row, pool)
    if computed is not None:
        computed[row.entries] = results
    forms = []
    if with_forms:
        forms = [
            [f"z^{res.spec.j}*{format_form(res.spec, g)}" for g in res.residual_basis]
            for res in results
        ]
    return QuotientGenus(
        subgroup=family.label,
        row=list(row.entries),
        dimensions=[res.dimension for res in results],
        pg=sum(res.dimension for res in results),
        forms=forms,
    )


def abelian_pg(
    arr: Arrangement,
    c: CharacterMap,
    chart: AffineChart | None = None,
    max_workers: int = 1,
    with_forms: bool = False,
    computed: RowResults | None = None,
) -> GenusReport:
    """p_g as the sum of cyclic_pg over the corank-1 subgroups, and q by Noether.

    When ``computed`` is given, the eigenspaces of each canonical row are stored
    in it by row entries.
    """
    require_valid(c, arr)
    if chart is None:
        chart = choose_chart(arr)
    families = quotient_rows(c).subgroups

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            quotients = [
                _quotient(arr, chart, fam, with_forms, pool, computed) for fam in families
            ]
    else:
        quotients = [
            _quotient(arr, chart, fam, with_forms, None, computed) for fam in families
        ]

    pg = sum(quotient.pg for quotient in quotients)
    chi = cover_invariants(arr, c).chi_holo
    return GenusReport(
        chart=chart.describe(),
        quotients=quotients,
        pg=pg,
        chi_holo=chi,
        q=chi - 1 - pg,
    )


@dataclass
class RowVerification:
    """Rows whose bases fail verification, and rows whose p_g differs from their subgroup's."""

    bad_bases: list[str] = field(default_factory=list)
    inconsistent: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.bad_bases and not self.inconsistent


def verify_quotients(
    arr: Arrangement,
    c: CharacterMap,
    chart: AffineChart,
    report: GenusReport,
    computed: RowResults | None = None,
    max_workers: int = 1,
) -> RowVerification:
    """Verify the eigenform bases of every row, not only the canonical ones.

    Each row of a subgroup defines the same cyclic cover, so its eigenspace
    dimensions must add up to the subgroup's p_g. Rows already in ``computed``
    are not recomputed.
    """
    known = dict(computed or {})
    families = quotient_rows(c).subgroups
    pending = [
        row for family in families for row in family.rows if row.entries not in known
    ]
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            fresh = list(pool.map(lambda row: row_eigenspaces(arr, chart, row), pending))
    else:
        fresh = [row_eigenspaces(arr, chart, row) for row in pending]
    known.update(zip((row.entries for row in pending), fresh, strict=True))

    outcome = RowVerification()
    for family, quotient in zip(families, report.quotients, strict=True):
        for row in family.rows:
            data = cyclic_cover_data(arr, row)
            results = known[row.entries]
            for result in results:
                if not verify_basis(chart, data, result):
                    outcome.bad_bases.append(f"{row.entries} j={result.spec.j}")
            row_pg = sum(result.dimension for result in results)
            if row_pg != quotient.pg:
                outcome.inconsistent.append(f"{row.entries}: {row_pg} != {quotient.pg}")
    return outcome


def bound_tables(
    p: int = 5,
    n_values: Sequence[int] = (1, 2, 3, 4),
    k_values: Sequence[int] = (1, 2, 3, 4),
    r_values: Sequence[int] = tuple(range(2, 13)),
) -> list[BoundTable]:
    """Degree, divisibility and point-order bounds per j, compared with the printed tables.

    ``formula`` is the unclamped value; ``clamped`` marks cells where it is negative
    and ``misprint`` cells where the printed value differs from max(formula, 0).
    """

    def cells(
        raw: Callable[[int, int], int],
        values: Sequence[int],
        printed: dict[int, tuple[int, ...]],
    ) -> list[TableCell]:
        out = []
        for value in values:
            for j in range(p):
                formula = raw(value, j)
                shown = printed.get(value) if p == 5 else None
                printed_value = shown[j] if shown is not None else None
                out.append(
                    TableCell(
                        j=j,
                        parameter=value,
                        formula=formula,
                        printed=printed_value,
                        clamped=formula < 0,
                        misprint=printed_value is not None
                        and printed_value != max(formula, 0),
                    )
                )
        return out

    return [
        BoundTable(
            name="degree",
            parameter_name="n",
            cells=cells(lambda n, j: degree_bound(p, n, j), n_values, PRINTED_DEGREE_TABLE),
        ),
        BoundTable(
            name="divisibility",
            parameter_name="k_i",
            cells=cells(
                lambda k, j: _ceil_div((p - j - 1) * k - p + 1, p),
                k_values,
                PRINTED_DIVISIBILITY_TABLE,
            ),
        ),
        BoundTable(
            name="point_order",
            parameter_name="r",
            cells=cells(
                lambda r, j: _ceil_div((p - j - 1) * r - 2 * p + 1, p),
                r_values,
                PRINTED_POINT_TABLE,
            ),
        ),
    ]


def expected_dimension_bound(spec: EigenspaceSpec) -> int:
    """Number of monomials of degree <= d_j - sum r_{j,i}: the unconstrained dimension."""
    e = max(spec.residual_degree, -1)
    return (e + 2) * (e + 1) // 2

