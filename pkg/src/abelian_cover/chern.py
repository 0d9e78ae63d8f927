"""Divisor classes on the blown-up plane and Chern numbers of the resolved cover.

All intersection numbers are computed downstairs in Pic(Y) (x) Q and scaled by
the degree of the cover; no upstairs lattice is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arrangement import Arrangement, IntersectionPoint, double_points, multiple_points
from .cover import CharacterMap, rank_mod_p, require_valid
from .errors import CoverError, UnsupportedInputError
from .exactmath import ExactMatrix, matrix_rank_kernel
from .models import CoverInvariants, IntersectionEntry, IntersectionTable


@dataclass(frozen=True)
class DivisorClass:
    """Rational class h*H + sum e_k*E_k on the plane blown up at n points."""

    h: Fraction
    e: tuple[Fraction, ...]

    @classmethod
    def zero(cls, n: int) -> DivisorClass:
        return cls(Fraction(0), tuple(Fraction(0) for _ in range(n)))

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(
            self.h + other.h, tuple(a + b for a, b in zip(self.e, other.e, strict=True))
        )

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + other * -1

    def __mul__(self, scalar: int | Fraction) -> DivisorClass:
        s = Fraction(scalar)
        return DivisorClass(self.h * s, tuple(a * s for a in self.e))

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> Fraction:
        # H^2 = 1, E_k^2 = -1, all other products vanish
        return self.h * other.h - sum(
            (a * b for a, b in zip(self.e, other.e, strict=True)), Fraction(0)
        )

    def coordinates(self) -> tuple[Fraction, ...]:
        return (self.h, *self.e)


@dataclass(frozen=True)
class BlowUpSurface:
    """The plane blown up at the multiple points of an arrangement."""

    points: tuple[IntersectionPoint, ...]
    line_classes: dict[int, DivisorClass]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def hyperplane(self) -> DivisorClass:
        return DivisorClass(Fraction(1), tuple(Fraction(0) for _ in self.points))

    def exceptional(self, index: int) -> DivisorClass:
        return DivisorClass(
            Fraction(0),
            tuple(Fraction(1 if k == index else 0) for k in range(self.size)),
        )

    @property
    def canonical(self) -> DivisorClass:
        """K_Y = -3H + sum E_P."""
        return DivisorClass(Fraction(-3), tuple(Fraction(1) for _ in self.points))

    def euler(self) -> int:
        return 3 + self.size


def blow_up_model(arr: Arrangement) -> BlowUpSurface:
    """Blow up every multiple point; strict transforms L_r = H - sum_{P on l_r} E_P."""
    points = tuple(multiple_points(arr))
    too_high = [p.name for p in points if p.multiplicity > 3]
    if too_high:
        raise UnsupportedInputError(
            f"Points of multiplicity >= 4 are not supported: {', '.join(too_high)}"
        )
    line_classes = {
        line.label: DivisorClass(
            Fraction(1),
            tuple(Fraction(-1 if line.label in p.labels else 0) for p in points),
        )
        for line in arr.lines
    }
    return BlowUpSurface(points=points, line_classes=line_classes)


@dataclass(frozen=True)
class BranchComponent:
    name: str
    down_class: DivisorClass
    ramification: int


@dataclass(frozen=True)
class BranchDivisor:
    """Branched curves on Y and the nodes where two of them cross."""

    components: tuple[BranchComponent, ...]
    # (first component, second component, order of the inertia group at the node)
    nodes: tuple[tuple[str, str, int], ...]

    @classmethod
    def empty(cls) -> BranchDivisor:
        return cls(components=(), nodes=())

    def total(self, size: int) -> DivisorClass:
        total = DivisorClass.zero(size)
        for component in self.components:
            total = total + component.down_class
        return total


def branch_divisor(model: BlowUpSurface, arr: Arrangement, c: CharacterMap) -> BranchDivisor:
    """Strict transforms of branched lines, exceptional curves of nonzero weight, and nodes."""
    components = [
        BranchComponent(f"L{line.label}", model.line_classes[line.label], c.p)
        for line in arr.lines
        if any(c.weight(line.label))
    ]
    nodes = []
    for index, point in enumerate(model.points):
        e_weight = c.exceptional_weight(point.labels)
        if not any(e_weight):
            continue
        name = f"E{point.name[1:]}"
        components.append(BranchComponent(name, model.exceptional(index), c.p))
        for label in point.sorted_labels:
            if any(c.weight(label)):
                inertia = c.p ** rank_mod_p([c.weight(label), e_weight], c.p)
                nodes.append((f"L{label}", name, inertia))
    for point in double_points(arr):
        first, second = point.sorted_labels
        if any(c.weight(first)) and any(c.weight(second)):
            inertia = c.p ** rank_mod_p([c.weight(first), c.weight(second)], c.p)
            nodes.append((f"L{first}", f"L{second}", inertia))
    return BranchDivisor(components=tuple(components), nodes=tuple(nodes))


def log_canonical(model: BlowUpSurface, branch: BranchDivisor, p: int) -> DivisorClass:
    """K_Y + (1 - 1/p) B: the class whose pull-back is the canonical class upstairs."""
    return model.canonical + branch.total(model.size) * (1 - Fraction(1, p))


def k_squared(model: BlowUpSurface, branch: BranchDivisor, p: int, group_order: int) -> int:
    value = group_order * log_canonical(model, branch, p).dot(log_canonical(model, branch, p))
    if value.denominator != 1:
        raise CoverError(f"K^2 = {value} is not integral; the cover data is inconsistent")
    return value.numerator


def stratified_euler(
    model: BlowUpSurface, branch: BranchDivisor, p: int, group_order: int
) -> int:
    """e = |G| e(Y - B) + (|G|/p) e(B - nodes) + sum over nodes of |G| / |I_node|."""
    node_count = len(branch.nodes)
    e_branch = 2 * len(branch.components) - node_count
    e_open = model.euler() - e_branch
    e_smooth_part = 2 * len(branch.components) - 2 * node_count
    total = Fraction(group_order) * e_open
    total += Fraction(group_order, p) * e_smooth_part
    total += sum(Fraction(group_order, inertia) for _, _, inertia in branch.nodes)
    if total.denominator != 1:
        raise CoverError(f"Euler characteristic {total} is not integral")
    return total.numerator


def _prepare(arr: Arrangement, c: CharacterMap) -> tuple[BlowUpSurface, BranchDivisor]:
    require_valid(c, arr)
    model = blow_up_model(arr)
    return model, branch_divisor(model, arr, c)


def cover_k_squared(arr: Arrangement, c: CharacterMap) -> int:
    """K^2 of the resolved cover, |G| (K_Y + (1 - 1/p) B)^2."""
    model, branch = _prepare(arr, c)
    return k_squared(model, branch, c.p, c.group_order)


def cover_euler(arr: Arrangement, c: CharacterMap) -> int:
    """Topological Euler characteristic of the resolved cover by stratification."""
    model, branch = _prepare(arr, c)
    return stratified_euler(model, branch, c.p, c.group_order)


def cover_invariants(arr: Arrangement, c: CharacterMap) -> CoverInvariants:
    model, branch = _prepare(arr, c)
    k2 = k_squared(model, branch, c.p, c.group_order)
    euler = stratified_euler(model, branch, c.p, c.group_order)
    return CoverInvariants(
        degree=c.group_order,
        k_squared=k2,
        euler=euler,
        chi_holo=Fraction(k2 + euler, 12),
        miyaoka_yau=k2 == 3 * euler,
    )


def _upstairs(
    down: DivisorClass, ramification: int, kappa: DivisorClass, group_order: int
) -> tuple[Fraction, Fraction]:
    # the reduced preimage C satisfies f^*(down) = ramification * C
    self_int = Fraction(group_order, ramification**2) * down.dot(down)
    k_degree = Fraction(group_order, ramification) * down.dot(kappa)
    return self_int, k_degree


def upstairs_intersections(arr: Arrangement, c: CharacterMap) -> IntersectionTable:
    """C_r^2, C_r.K for the line preimages and D_P^2, D_P.K for the exceptional ones."""
    model, branch = _prepare(arr, c)
    kappa = log_canonical(model, branch, c.p)
    g = c.group_order

    lines = []
    for line in arr.lines:
        ram = c.p if any(c.weight(line.label)) else 1
        s, k = _upstairs(model.line_classes[line.label], ram, kappa, g)
        lines.append(
            IntersectionEntry(
                component=f"C{line.label}", self_intersection=s, canonical_degree=k
            )
        )

    exceptional = []
    for index, point in enumerate(model.points):
        ram = c.p if any(c.exceptional_weight(point.labels)) else 1
        s, k = _upstairs(model.exceptional(index), ram, kappa, g)
        exceptional.append(
            IntersectionEntry(
                component=f"D{point.name[1:]}", self_intersection=s, canonical_degree=k
            )
        )

    decomposition = canonical_decomposition(arr, c)
    return IntersectionTable(
        lines=lines,
        exceptional=exceptional,
        canonical_decomposition=list(decomposition) if decomposition else None,
        ampleness=ampleness_checks(k_squared(model, branch, c.p, g), lines, exceptional),
    )


def canonical_decomposition(
    arr: Arrangement, c: CharacterMap
) -> tuple[Fraction, Fraction] | None:
    """Solve 3K = a * sum C_r + b * sum D_P exactly; None if K is not in their span."""
    model, branch = _prepare(arr, c)
    kappa = log_canonical(model, branch, c.p)

    sum_c = DivisorClass.zero(model.size)
    for line in arr.lines:
        ram = c.p if any(c.weight(line.label)) else 1
        sum_c = sum_c + model.line_classes[line.label] * Fraction(1, ram)
    sum_d = DivisorClass.zero(model.size)
    for index, point in enumerate(model.points):
        ram = c.p if any(c.exceptional_weight(point.labels)) else 1
        sum_d = sum_d + model.exceptional(index) * Fraction(1, ram)

    # columns: sum C, sum D, 3K; a kernel vector (x, y, z) with z != 0 gives a = -x/z
    target = kappa * 3
    matrix = ExactMatrix.from_rows(
        zip(sum_c.coordinates(), sum_d.coordinates(), target.coordinates(), strict=True)
    )
    _, kernel = matrix_rank_kernel(matrix)
    if len(kernel) != 1 or kernel[0][2].is_zero():
        return None
    x, y, z = kernel[0]
    a, b = -x / z, -y / z
    if not (a.is_rational() and b.is_rational()):
        return None
    return a.a, b.a


def ampleness_checks(
    k2: int, lines: list[IntersectionEntry], exceptional: list[IntersectionEntry]
) -> dict[str, bool]:
    """The inequalities read off from the intersection table.

    Only K^2 > 0 and positivity on the branch curves are checked; this is not a
    full Nakai-Moishezon verification over all curves.
    """
    return {
        "k_squared_positive": k2 > 0,
        "k_dot_lines_positive": all(e.canonical_degree > 0 for e in lines),
        "k_dot_exceptional_positive": all(e.canonical_degree > 0 for e in exceptional),
    }
