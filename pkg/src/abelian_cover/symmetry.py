"""Klein transformations of the plane that preserve an arrangement and lift to its cover.

A transformation is holomorphic (a projectivity) or antiholomorphic (a
projectivity composed with complex conjugation of coordinates). It lifts to the
cover only if its action on characters, psi -> (-1)^kl * psi o g_*, maps the
table of quotient rows onto itself.
"""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .arrangement import Arrangement, Triple, multiple_points
from .cover import CharacterMap, QuotientFamily, quotient_rows, weight_profile
from .errors import UnsupportedInputError
from .exactmath import ZERO, ExactMatrix, cross, matrix_rank_kernel, normalize_leading
from .models import RigidityReport


@dataclass(frozen=True)
class LinePermutation:
    """g_* on line labels: ``images[i - 1]`` is the label that line i is sent to."""

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> LinePermutation:
        return cls(tuple(range(1, n + 1)))

    def __call__(self, label: int) -> int:
        return self.images[label - 1]

    @property
    def is_identity(self) -> bool:
        return all(image == label for label, image in enumerate(self.images, 1))

    def compose(self, other: LinePermutation) -> LinePermutation:
        """self after other."""
        size = len(self.images)
        return LinePermutation(tuple(self(other(i)) for i in range(1, size + 1)))

    def inverse(self) -> LinePermutation:
        result = [0] * len(self.images)
        for label, image in enumerate(self.images, 1):
            result[image - 1] = label
        return LinePermutation(tuple(result))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        found = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            current = self(start)
            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)
            if len(cycle) > 1:
                found.append(tuple(cycle))
        return found

    def __str__(self) -> str:
        if self.is_identity:
            return "identity"
        return "".join("(" + " ".join(str(v) for v in cycle) + ")" for cycle in self.cycles())


@dataclass(frozen=True)
class KleinCandidate:
    """A line permutation with its realizing matrix, if any.

    ``matrix`` acts on line coefficient vectors: matrix * c_i (c_i conjugated first
    when antiholomorphic) is proportional to c_{pi(i)}.
    """

    permutation: LinePermutation
    holomorphic: bool
    matrix: ExactMatrix | None = None

    @property
    def kl(self) -> int:
        return 0 if self.holomorphic else 1

    def compose(self, other: KleinCandidate) -> KleinCandidate:
        return KleinCandidate(
            permutation=self.permutation.compose(other.permutation),
            holomorphic=self.holomorphic == other.holomorphic,
        )

    def key(self) -> tuple[bool, tuple[int, ...]]:
        return (not self.holomorphic, self.permutation.images)

    def describe(self) -> str:
        text = str(self.permutation)
        return text if self.holomorphic else f"{text} (antiholomorphic)"


def incidence_automorphisms(arr: Arrangement) -> list[LinePermutation]:
    """Permutations of the lines mapping multiple points onto multiple points.

    Backtracking over line images; a partial assignment is pruned as soon as two
    assigned lines meet at points of different multiplicity, or a fully assigned
    multiple point maps to a set that is not a multiple point.
    """
    labels = arr.labels
    blocks = {p.labels for p in multiple_points(arr)}
    meet_size: dict[frozenset[int], int] = {}
    for point in arr.points:
        for pair in combinations(point.sorted_labels, 2):
            meet_size[frozenset(pair)] = point.multiplicity
    blocks_through = {
        label: [block for block in blocks if label in block] for label in labels
    }

    found: list[LinePermutation] = []
    assignment: dict[int, int] = {}
    used: set[int] = set()

    def consistent(label: int, image: int) -> bool:
        for other, other_image in assignment.items():
            if meet_size[frozenset((label, other))] != meet_size[
                frozenset((image, other_image))
            ]:
                return False
        trial = {**assignment, label: image}
        for block in blocks_through[label]:
            if all(member in trial for member in block):
                if frozenset(trial[member] for member in block) not in blocks:
                    return False
        return True

    def extend(index: int) -> None:
        if index == len(labels):
            found.append(LinePermutation(tuple(assignment[label] for label in labels)))
            return
        label = labels[index]
        for image in labels:
            if image in used or not consistent(label, image):
                continue
            assignment[label] = image
            used.add(image)
            extend(index + 1)
            del assignment[label]
            used.discard(image)

    extend(0)
    return found


def _concurrent(arr: Arrangement, triple: Sequence[int]) -> bool:
    matrix = ExactMatrix.from_rows(arr.line(label).coefficients for label in triple)
    return matrix.det().is_zero()


def general_position_anchor(arr: Arrangement) -> tuple[int, int, int, int]:
    """Lexicographically first four lines with no three concurrent."""
    for quad in combinations(arr.labels, 4):
        if not any(_concurrent(arr, triple) for triple in combinations(quad, 3)):
            first, second, third, fourth = quad
            return first, second, third, fourth
    raise UnsupportedInputError(
        "Arrangement has no four lines in general position; "
        "projective transformations are not determined by the lines"
    )


def realize(
    perm: LinePermutation,
    holomorphic: bool,
    arr: Arrangement,
    anchor: Sequence[int] | None = None,
) -> KleinCandidate | None:
    """Solve for a projective matrix realizing perm, or return None.

    The matrix is fixed up to scalar by the four anchor lines, then checked on
    every line and for nondegeneracy.
    """
    if anchor is None:
        anchor = general_position_anchor(arr)
    elif len(anchor) != 4 or any(_concurrent(arr, t) for t in combinations(anchor, 3)):
        raise UnsupportedInputError(
            f"Anchor {tuple(anchor)} is not four lines in general position"
        )

    def source(label: int) -> Triple:
        line = arr.line(label)
        return line.coefficients if holomorphic else line.conjugate_coefficients()

    # unknowns T[a][b] at index 3a + b; (T s) x t = 0 gives three rows per line
    conditions = []
    for label in anchor:
        s = source(label)
        t = arr.line(perm(label)).coefficients
        for first, second in ((1, 2), (2, 0), (0, 1)):
            row = [ZERO] * 9
            for b in range(3):
                row[3 * first + b] = s[b] * t[second]
                row[3 * second + b] = -(s[b] * t[first])
            conditions.append(row)

    _, kernel = matrix_rank_kernel(ExactMatrix.from_rows(conditions, 9))
    if len(kernel) != 1:
        return None
    flat = normalize_leading(kernel[0])
    matrix = ExactMatrix.from_rows([flat[0:3], flat[3:6], flat[6:9]])
    if matrix.det().is_zero():
        return None
    for line in arr.lines:
        image = matrix.apply(source(line.label))
        target = arr.line(perm(line.label)).coefficients
        if not all(v.is_zero() for v in cross(image, target)):
            return None
    return KleinCandidate(permutation=perm, holomorphic=holomorphic, matrix=matrix)


def act_on_row(cand: KleinCandidate, entries: Sequence[int], p: int) -> tuple[int, ...]:
    """(-1)^kl * psi o g_* as a weight vector."""
    sign = -1 if cand.kl else 1
    return tuple(
        (sign * entries[cand.permutation(i) - 1]) % p for i in range(1, len(entries) + 1)
    )


def _flip_profile(profile: tuple[int, ...]) -> tuple[int, ...]:
    # r_i(-psi) = r_{p-i}(psi)
    return (profile[0], *reversed(profile[1:]))


def profile_filter_rejects(cand: KleinCandidate, fam: QuotientFamily) -> bool:
    """Fast necessary test: transformed rows must keep a profile present in the table."""
    rows = fam.all_rows()
    profiles = {weight_profile(row) for row in rows}
    for row in rows:
        profile = weight_profile(row)
        if cand.kl:
            profile = _flip_profile(profile)
        if profile not in profiles:
            return True
    return False


def maps_rows_into_table(cand: KleinCandidate, fam: QuotientFamily) -> bool:
    """Full row test: every row of the quotient table goes to a row of the table."""
    table = {row.entries for row in fam.all_rows()}
    return all(act_on_row(cand, entries, fam.p) in table for entries in table)


def respects_covering(cand: KleinCandidate, fam: QuotientFamily) -> bool:
    """True iff the candidate maps every row of the quotient table to a row of the table."""
    if profile_filter_rejects(cand, fam):
        return False
    return maps_rows_into_table(cand, fam)


def is_closed(candidates: Sequence[KleinCandidate]) -> bool:
    keys = {cand.key() for cand in candidates}
    return all(
        first.compose(second).key() in keys for first in candidates for second in candidates
    )


def _realize_both(
    perm: LinePermutation, arr: Arrangement, anchor: Sequence[int] | None
) -> list[KleinCandidate]:
    found = []
    for holomorphic in (True, False):
        cand = realize(perm, holomorphic, arr, anchor)
        if cand is not None:
            found.append(cand)
    return found


def realizable_candidates(
    arr: Arrangement, anchor: Sequence[int] | None = None, max_workers: int = 1
) -> tuple[list[LinePermutation], list[KleinCandidate]]:
    perms = incidence_automorphisms(arr)
    if anchor is None:
        anchor = general_position_anchor(arr)
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            batches = list(pool.map(lambda perm: _realize_both(perm, arr, anchor), perms))
    else:
        batches = [_realize_both(perm, arr, anchor) for perm in perms]
    candidates = sorted((cand for batch in batches for cand in batch), key=KleinCandidate.key)
    return perms, candidates


def rigidity_search(
    arr: Arrangement,
    c: CharacterMap,
    anchor: Sequence[int] | None = None,
    max_workers: int = 1,
) -> RigidityReport:
    """Realizable Klein candidates and the ones that respect the covering."""
    fam = quotient_rows(c)
    perms, candidates = realizable_candidates(arr, anchor, max_workers)
    survivors = [cand for cand in candidates if respects_covering(cand, fam)]
    filtered = sum(1 for cand in candidates if profile_filter_rejects(cand, fam))

    notes = [
        "Klein transformations of the cover are assumed to preserve the unions of "
        "line and exceptional preimages and hence to descend to the plane; only "
        "the descended transformations are searched.",
        f"Weight-profile filter rejected {filtered} of {len(candidates)} candidates "
        "before the full row test.",
    ]
    obstruction = diophantine_obstruction(7, 12, 27)
    if not obstruction:
        notes.append("7a + 12b = 27 has no solution in non-negative integers.")

    return RigidityReport(
        incidence_automorphisms=len(perms),
        realizable=len(candidates),
        realizable_holomorphic=sum(1 for cand in candidates if cand.holomorphic),
        realizable_antiholomorphic=sum(1 for cand in candidates if not cand.holomorphic),
        respecting=[cand.describe() for cand in survivors],
        deck_group_order=c.group_order,
        survivors_form_group=is_closed(survivors),
        notes=notes,
    )


def diophantine_obstruction(x_coeff: int, y_coeff: int, target: int) -> list[tuple[int, int]]:
    """All (a, b) with a, b >= 0 and x_coeff*a + y_coeff*b = target."""
    if x_coeff <= 0 or y_coeff <= 0:
        raise ValueError("Coefficients must be positive")
    if target < 0:
        return []
    return [
        (a, (target - x_coeff * a) // y_coeff)
        for a in range(target // x_coeff + 1)
        if (target - x_coeff * a) % y_coeff == 0
    ]
