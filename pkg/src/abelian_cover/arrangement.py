"""Line arrangements in the projective plane over Q(mu)."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import CoincidentLinesError
from .exactmath import MU, ONE, ZERO, CycloNum, Scalar, cross, normalize_leading

Triple = tuple[CycloNum, CycloNum, CycloNum]


def _triple(values: Sequence[Scalar]) -> Triple:
    if len(values) != 3:
        raise ValueError(f"Expected 3 homogeneous coordinates, got {len(values)}")
    a, b, c = normalize_leading(values)
    return (a, b, c)


@dataclass(frozen=True)
class ProjLine:
    """The line c1*x1 + c2*x2 + c3*x3 = 0, stored with first nonzero coefficient 1.

    ``given`` keeps the coefficients as they were supplied, before scaling; it
    takes no part in equality.
    """

    coefficients: Triple
    label: int
    given: Triple | None = field(default=None, compare=False, repr=False)

    @classmethod
    def from_coefficients(cls, coefficients: Sequence[Scalar], label: int) -> ProjLine:
        normalized = _triple(coefficients)
        c1, c2, c3 = (CycloNum.coerce(value) for value in coefficients)
        return cls(normalized, label, (c1, c2, c3))

    @property
    def original_coefficients(self) -> Triple:
        return self.coefficients if self.given is None else self.given

    def evaluate(self, coordinates: Sequence[CycloNum]) -> CycloNum:
        c1, c2, c3 = self.coefficients
        return c1 * coordinates[0] + c2 * coordinates[1] + c3 * coordinates[2]

    def contains(self, point: ProjPoint) -> bool:
        return self.evaluate(point.coordinates).is_zero()

    def is_proportional(self, other: ProjLine) -> bool:
        return self.coefficients == other.coefficients

    def conjugate_coefficients(self) -> Triple:
        c1, c2, c3 = self.coefficients
        return (c1.conjugate(), c2.conjugate(), c3.conjugate())

    @property
    def name(self) -> str:
        return f"l{self.label}"


@dataclass(frozen=True)
class ProjPoint:
    """A point (x1 : x2 : x3), stored with first nonzero coordinate 1."""

    coordinates: Triple

    @classmethod
    def from_coordinates(cls, coordinates: Sequence[Scalar]) -> ProjPoint:
        return cls(_triple(coordinates))

    def sort_key(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(c.sort_key() for c in self.coordinates)

    def __str__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coordinates) + ")"


@dataclass(frozen=True)
class IntersectionPoint:
    """A point where at least two lines of an arrangement meet."""

    point: ProjPoint
    labels: frozenset[int]

    @property
    def multiplicity(self) -> int:
        return len(self.labels)

    @property
    def sorted_labels(self) -> tuple[int, ...]:
        return tuple(sorted(self.labels))

    @property
    def name(self) -> str:
        ordered = self.sorted_labels
        if all(label < 10 for label in ordered):
            return "p" + "".join(str(label) for label in ordered)
        return "p" + ",".join(str(label) for label in ordered)


@dataclass(frozen=True)
class Arrangement:
    """Lines together with every intersection point and its incident lines."""

    lines: tuple[ProjLine, ...]
    points: tuple[IntersectionPoint, ...]
    pair_map: dict[frozenset[int], ProjPoint]

    def line(self, label: int) -> ProjLine:
        for line in self.lines:
            if line.label == label:
                return line
        raise KeyError(f"No line labelled {label}")

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(line.label for line in self.lines)

    def __len__(self) -> int:
        return len(self.lines)


def intersect(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """Intersection point of two distinct lines (2x2 minors of the coefficients)."""
    meet = cross(l1.coefficients, l2.coefficients)
    if all(v.is_zero() for v in meet):
        raise CoincidentLinesError(f"Lines {l1.name} and {l2.name} coincide")
    return ProjPoint.from_coordinates(meet)


def build_arrangement(
    coefficient_rows: Sequence[Sequence[Scalar]], labels: Sequence[int] | None = None
) -> Arrangement:
    """Build an arrangement from line coefficients; labels default to 1..n.

    Multiple points are found by grouping pairwise intersections on their
    normalized coordinates.
    """
    if labels is None:
        labels = list(range(1, len(coefficient_rows) + 1))
    if len(labels) != len(coefficient_rows):
        raise ValueError("One label is needed per line")
    lines = tuple(
        ProjLine.from_coefficients(row, label)
        for row, label in zip(coefficient_rows, labels, strict=True)
    )

    pair_map: dict[frozenset[int], ProjPoint] = {}
    incident: dict[ProjPoint, set[int]] = {}
    for first, second in combinations(lines, 2):
        point = intersect(first, second)
        pair_map[frozenset((first.label, second.label))] = point
        incident.setdefault(point, set()).update((first.label, second.label))

    points = tuple(
        sorted(
            (IntersectionPoint(point, frozenset(found)) for point, found in incident.items()),
            key=lambda p: (p.sorted_labels, p.point.sort_key()),
        )
    )
    return Arrangement(lines=lines, points=points, pair_map=pair_map)


# Coefficients of l1..l9 in (x1, x2, x3); mu^2 = mu - 1 is written as -1 + mu.
_CEVA_LINES: tuple[Triple, ...] = (
    (ONE, ZERO, -ONE),  # x1 - x3
    (ONE, ZERO, ONE - MU),  # x1 - mu^2 x3
    (ONE, ZERO, MU),  # x1 + mu x3
    (ZERO, ONE, ONE - MU),  # x2 - mu^2 x3
    (ZERO, ONE, -ONE),  # x2 - x3
    (ZERO, ONE, MU),  # x2 + mu x3
    (ONE, MU, ZERO),  # x1 + mu x2
    (ONE, ONE - MU, ZERO),  # x1 - mu^2 x2
    (ONE, -ONE, ZERO),  # x1 - x2
)


def build_ceva() -> Arrangement:
    """The Ceva arrangement (x1^3 - x2^3)(x2^3 - x3^3)(x3^3 - x1^3) = 0 with labels 1..9."""
    return build_arrangement(_CEVA_LINES)


def affine_plane_labels() -> dict[int, tuple[int, int]]:
    """Position of each Ceva line in the 3x3 grid of points of order 3.

    Columns are (l1, l2, l3), (l4, l5, l6), (l7, l8, l9); the concurrent triples
    are exactly the affine lines of (Z/3)^2 in these coordinates.
    """
    return {3 * col + row + 1: (col, row) for col in range(3) for row in range(3)}


def multiple_points(arr: Arrangement) -> list[IntersectionPoint]:
    """Points lying on at least three lines, with their incident line labels."""
    return [p for p in arr.points if p.multiplicity >= 3]


def double_points(arr: Arrangement) -> list[IntersectionPoint]:
    """Simple intersection points (exactly two lines)."""
    return [p for p in arr.points if p.multiplicity == 2]


def incidence_profile(arr: Arrangement) -> list[int]:
    """Number of multiple points on each line, in line order."""
    found = multiple_points(arr)
    return [sum(1 for p in found if line.label in p.labels) for line in arr.lines]


def concurrent_triples(arr: Arrangement) -> set[frozenset[int]]:
    return {p.labels for p in multiple_points(arr) if p.multiplicity == 3}


def unmatched_point_names(arr: Arrangement, names: Sequence[str]) -> list[str]:
    """Printed point names (e.g. "p349") that name no multiple point of arr."""
    known = {p.name for p in multiple_points(arr)}
    return [name for name in names if name not in known]
