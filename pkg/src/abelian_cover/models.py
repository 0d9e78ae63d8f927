from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from .utils.formatting import exact_value

# Exact rational serialized as an int when integral, "num/den" otherwise.
ExactNumber = Annotated[
    Fraction, PlainSerializer(exact_value, return_type=int | str, when_used="always")
]


class ExactModel(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)


class CheckResult(BaseModel):
    """Outcome of one named check."""

    name: str
    passed: bool
    details: list[str] = Field(default_factory=list)


class ValidationReport(BaseModel):
    """Validation of character data against an arrangement."""

    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]


class CoverInvariants(ExactModel):
    """Chern numbers of the resolved cover."""

    degree: int = Field(..., description="Order of the deck group")
    k_squared: int
    euler: int
    chi_holo: ExactNumber = Field(..., description="(K^2 + e) / 12")
    miyaoka_yau: bool = Field(..., description="K^2 = 3e")


class IntersectionEntry(ExactModel):
    """Self-intersection and canonical degree of one upstairs curve class."""

    component: str
    self_intersection: ExactNumber
    canonical_degree: ExactNumber


class IntersectionTable(ExactModel):
    lines: list[IntersectionEntry]
    exceptional: list[IntersectionEntry]
    canonical_decomposition: list[ExactNumber] | None = Field(
        None, description="(a, b) with 3K = a*sum(C) + b*sum(D)"
    )
    ampleness: dict[str, bool] = Field(default_factory=dict)


class QuotientGenus(BaseModel):
    """Geometric genus of one cyclic quotient, split by eigenspace."""

    subgroup: str
    row: list[int]
    dimensions: list[int]
    pg: int
    forms: list[list[str]] = Field(default_factory=list)


class GenusReport(ExactModel):
    """Geometric genus and irregularity of the abelian cover."""

    chart: str
    quotients: list[QuotientGenus]
    pg: int
    chi_holo: ExactNumber
    q: ExactNumber


class RigidityReport(BaseModel):
    """Klein transformations of the plane that lift to the cover."""

    incidence_automorphisms: int
    realizable: int
    realizable_holomorphic: int
    realizable_antiholomorphic: int
    respecting: list[str]
    deck_group_order: int
    survivors_form_group: bool
    notes: list[str] = Field(default_factory=list)


class BranchCurveData(BaseModel):
    """Invariants of the branch curve of a generic projection given by mK."""

    k_squared: int
    m: int
    covering_degree: int
    curve_degree: int
    geometric_genus: int
    cusp_count: int
    node_count: int
    embedding_dimension: int | None = None
    extrapolated: bool = False


class NumerologyReport(BaseModel):
    branch_curves: list[BranchCurveData]
    dimension: int
    deformation_classes: int
    homeotopy_order: int
    product_classes: int
    self_conjugate_classes: list[list[int]]


class TableCell(BaseModel):
    """One cell of a bound table: the formula value, the printed value and flags."""

    j: int
    parameter: int
    formula: int
    printed: int | None = None
    clamped: bool = False
    misprint: bool = False


class BoundTable(BaseModel):
    name: str
    parameter_name: str
    cells: list[TableCell]


class ArrangementSummary(BaseModel):
    line_count: int
    multiple_points: dict[str, int] = Field(
        ..., description="Multiplicity -> number of points"
    )
    triples: list[str]
    double_points: int


class CharacterEcho(BaseModel):
    p: int
    m: int
    weights: list[list[int]]


class Report(ExactModel):
    """End-to-end report for one arrangement and character."""

    source: str
    arrangement: ArrangementSummary
    character: CharacterEcho
    validation: list[CheckResult]
    K2: int | None = None
    euler: int | None = None
    miyaoka_yau: bool | None = None
    quotient_pg: list[int] | None = None
    pg: int | None = None
    q: ExactNumber | None = None
    rigidity_survivors: list[str] | None = None
    invariants: CoverInvariants | None = None
    intersections: IntersectionTable | None = None
    genus: GenusReport | None = None
    rigidity: RigidityReport | None = None
    numerology: NumerologyReport | None = None
    tables: list[BoundTable] | None = None
    checks: list[CheckResult] = Field(default_factory=list)
    provenance_notes: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.validation + self.checks)

    def to_json_dict(self) -> dict[str, Any]:
        return self.model_dump(mode="json", exclude_none=True)
