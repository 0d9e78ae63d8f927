"""Character data of abelian covers branched along line arrangements."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product
from math import isqrt

from .arrangement import Arrangement, double_points, multiple_points
from .errors import InvalidCharacterError, UnsupportedInputError
from .models import CheckResult, ValidationReport

Weight = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


def rank_mod_p(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank over Z/p of the given row vectors."""
    rows = [[v % p for v in row] for row in vectors]
    if not rows:
        return 0
    rank = 0
    for col in range(len(rows[0])):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(v * inv) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [
                    (a - factor * b) % p
                    for a, b in zip(rows[i], rows[rank], strict=True)
                ]
        rank += 1
    return rank


@dataclass(frozen=True)
class CharacterMap:
    """The homomorphism phi: line generators -> (Z/p)^m, one weight vector per line."""

    p: int
    m: int
    weights: tuple[Weight, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise UnsupportedInputError(f"p = {self.p} is not prime")
        if self.m < 1:
            raise UnsupportedInputError(f"Rank m must be at least 1, got {self.m}")
        reduced = []
        for index, weight in enumerate(self.weights, 1):
            if len(weight) != self.m:
                raise UnsupportedInputError(
                    f"Weight of line {index} has {len(weight)} entries, expected {self.m}"
                )
            reduced.append(tuple(v % self.p for v in weight))
        object.__setattr__(self, "weights", tuple(reduced))

    @property
    def group_order(self) -> int:
        return self.p**self.m

    def weight(self, label: int) -> Weight:
        return self.weights[label - 1]

    def total(self) -> Weight:
        return tuple(
            sum(w[k] for w in self.weights) % self.p for k in range(self.m)
        )

    def is_surjective(self) -> bool:
        return rank_mod_p(self.weights, self.p) == self.m

    def exceptional_weight(self, labels: frozenset[int] | Sequence[int]) -> Weight:
        """Weight of the exceptional curve over a point: the sum over its lines."""
        return tuple(
            sum(self.weight(label)[k] for label in labels) % self.p
            for k in range(self.m)
        )

    def row(self, character: Sequence[int]) -> CharacterRow:
        """The row psi = sum_k character[k] * phi_k."""
        return CharacterRow(
            self.p,
            tuple(
                sum(c * w[k] for k, c in enumerate(character)) % self.p
                for w in self.weights
            ),
        )


@dataclass(frozen=True)
class CharacterRow:
    """A Z/p weight vector on the lines: one cyclic quotient cover."""

    p: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        entries = tuple(v % self.p for v in self.entries)
        if not any(entries):
            raise InvalidCharacterError("A character row cannot be identically zero")
        if sum(entries) % self.p:
            raise InvalidCharacterError(
                f"Row {entries} has branch degree {sum(entries)} not divisible by {self.p}"
            )
        object.__setattr__(self, "entries", entries)

    def scaled(self, t: int) -> CharacterRow:
        return CharacterRow(self.p, tuple(t * v for v in self.entries))

    @property
    def branch_degree(self) -> int:
        """sum k_i with 0 <= k_i < p, equal to n * p."""
        return sum(self.entries)

    @property
    def n(self) -> int:
        return self.branch_degree // self.p

    def branch_labels(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.entries, 1) if k)

    def weight(self, label: int) -> int:
        return self.entries[label - 1]


@dataclass(frozen=True)
class SubgroupFamily:
    """An index-p subgroup H of (Z/p)^m and the p - 1 rows with kernel H."""

    character: Weight
    generator: Weight | None
    rows: tuple[CharacterRow, ...]

    @property
    def canonical_row(self) -> CharacterRow:
        """Row of least branch degree, ties broken lexicographically."""
        return min(self.rows, key=lambda r: (r.branch_degree, r.entries))

    @property
    def label(self) -> str:
        if self.generator is not None:
            return "((" + ",".join(str(v) for v in self.generator) + "))"
        return "ker(" + ",".join(str(v) for v in self.character) + ")"


@dataclass(frozen=True)
class QuotientFamily:
    p: int
    m: int
    subgroups: tuple[SubgroupFamily, ...]

    def all_rows(self) -> list[CharacterRow]:
        return [row for family in self.subgroups for row in family.rows]


def ceva_character() -> CharacterMap:
    """The (Z/5)^2 character of the Ceva cover, lines l1..l9."""
    return CharacterMap(
        p=5,
        m=2,
        weights=((1, 1), (1, 0), (1, 1), (3, 3), (3, 0), (0, 1), (0, 1), (0, 2), (1, 1)),
    )


def _independent(u: Weight, v: Weight, p: int) -> bool:
    return rank_mod_p([u, v], p) == 2


def validate_character(c: CharacterMap, arr: Arrangement) -> ValidationReport:
    """Check that c defines a cover whose induced cover of the blown-up plane is smooth."""
    if len(c.weights) != len(arr.lines):
        raise UnsupportedInputError(
            f"Character has {len(c.weights)} weights for {len(arr.lines)} lines"
        )

    checks = [
        CheckResult(
            name="surjectivity",
            passed=c.is_surjective(),
            details=[] if c.is_surjective() else ["weights do not span (Z/p)^m"],
        ),
    ]

    total = c.total()
    checks.append(
        CheckResult(
            name="branch_degree",
            passed=not any(total),
            details=[] if not any(total) else [f"sum of weights is {total}, not 0"],
        )
    )

    unbranched = [line.name for line in arr.lines if not any(c.weight(line.label))]
    checks.append(
        CheckResult(
            name="lines_branched",
            passed=not unbranched,
            details=[f"{name} has weight 0" for name in unbranched],
        )
    )

    bad_nodes: list[str] = []
    for point in multiple_points(arr):
        e_weight = c.exceptional_weight(point.labels)
        if not any(e_weight):
            continue
        for label in point.sorted_labels:
            if not _independent(c.weight(label), e_weight, c.p):
                bad_nodes.append(f"(l{label}, E_{point.name[1:]})")
    for point in double_points(arr):
        first, second = point.sorted_labels
        w1, w2 = c.weight(first), c.weight(second)
        if any(w1) and any(w2) and not _independent(w1, w2, c.p):
            bad_nodes.append(f"(l{first}, l{second})")
    checks.append(
        CheckResult(name="smooth_nodes", passed=not bad_nodes, details=bad_nodes)
    )
    return ValidationReport(checks=checks)


def require_valid(c: CharacterMap, arr: Arrangement) -> ValidationReport:
    report = validate_character(c, arr)
    if not report.ok:
        failures = [
            f"{check.name}: {detail}"
            for check in report.failed
            for detail in check.details or ["failed"]
        ]
        raise InvalidCharacterError(
            "Character failed validation: " + "; ".join(failures), failures
        )
    return report


def _normalize(vector: Sequence[int], p: int, position: int) -> Weight:
    """Scale so that the first (position=0) or last (position=-1) nonzero entry is 1."""
    nonzero = [v for v in vector if v % p]
    lead = nonzero[position]
    inv = pow(lead, -1, p)
    return tuple((v * inv) % p for v in vector)


def _character_order(p: int, m: int) -> list[Weight]:
    """Normalized characters: the coordinate characters first, then the rest lexicographically."""
    basis = [tuple(1 if k == j else 0 for k in range(m)) for j in range(m)]
    others = sorted(
        {
            _normalize(v, p, 0)
            for v in product(range(p), repeat=m)
            if any(v)
        }
        - set(basis)
    )
    return basis + others


def quotient_rows(c: CharacterMap) -> QuotientFamily:
    """Group the p^m - 1 nonzero rows x*phi into (p^m - 1)/(p - 1) subgroup families."""
    families = []
    for character in _character_order(c.p, c.m):
        rows = tuple(c.row(tuple(t * x for x in character)) for t in range(1, c.p))
        generator = None
        if c.m == 2:
            x, y = character
            generator = _normalize((y, -x % c.p), c.p, -1)
        families.append(SubgroupFamily(character=character, generator=generator, rows=rows))
    return QuotientFamily(p=c.p, m=c.m, subgroups=tuple(families))


def weight_profile(row: CharacterRow) -> tuple[int, ...]:
    """Counts r_i of entries equal to i, for i = 0..p-1."""
    counts = [0] * row.p
    for value in row.entries:
        counts[value] += 1
    return tuple(counts)
