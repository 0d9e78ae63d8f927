from collections import Counter
from pathlib import Path

import click

from . import reference
from .arrangement import (
    Arrangement,
    build_ceva,
    double_points,
    multiple_points,
    unmatched_point_names,
)
from .chern import cover_invariants, upstairs_intersections
from .config import ToolkitConfig
from .cover import CharacterMap, ceva_character, require_valid
from .errors import NumerologyError, UnsupportedInputError
from .genus import RowResults, abelian_pg, bound_tables, choose_chart, verify_quotients
from .inputs import load_arrangement, load_character
from .models import (
    ArrangementSummary,
    BoundTable,
    CharacterEcho,
    CheckResult,
    Report,
)
from .numerology import numerology_report
from .symmetry import diophantine_obstruction, rigidity_search

SECTIONS = ("invariants", "pg", "rigidity", "numerology", "tables")


def _check(name: str, passed: bool, detail: str | None = None) -> CheckResult:
    return CheckResult(name=name, passed=passed, details=[] if passed or not detail else [detail])


def summarize_arrangement(arr: Arrangement) -> ArrangementSummary:
    counts = Counter(p.multiplicity for p in multiple_points(arr))
    return ArrangementSummary(
        line_count=len(arr),
        multiple_points={str(k): v for k, v in sorted(counts.items())},
        triples=[p.name for p in multiple_points(arr) if p.multiplicity == 3],
        double_points=len(double_points(arr)),
    )


class CoverPipeline:
    """Runs the requested sections for one arrangement and character."""

    def __init__(self, config: ToolkitConfig):
        self.config = config

    def _log(self, message: str) -> None:
        if self.config.report.verbose:
            click.echo(message, err=True)

    def run(
        self,
        arr: Arrangement,
        c: CharacterMap,
        source: str,
        sections: tuple[str, ...] = SECTIONS,
        with_bases: bool = False,
    ) -> Report:
        """Compute every requested section and collect checks and provenance notes.

        Reference checks against published values are added when the input is the
        Ceva arrangement with its (Z/5)^2 character, wherever it was loaded from.
        """
        unknown = set(sections) - set(SECTIONS)
        if unknown:
            raise ValueError(f"Unknown sections: {', '.join(sorted(unknown))}")
        is_ceva = arr.lines == build_ceva().lines and c == ceva_character()

        self._log(
            f"📐 Arrangement: {len(arr)} lines, {len(multiple_points(arr))} multiple points"
        )
        validation = require_valid(c, arr) if {"invariants", "pg"} & set(sections) else None
        report = Report(
            source=source,
            arrangement=summarize_arrangement(arr),
            character=CharacterEcho(p=c.p, m=c.m, weights=[list(w) for w in c.weights]),
            validation=validation.checks if validation else [],
        )

        if is_ceva:
            self._ceva_arrangement_checks(arr, report)

        if "invariants" in sections:
            self._invariants(arr, c, report, is_ceva)
        if "pg" in sections:
            self._genus(arr, c, report, is_ceva, with_bases)
        if "rigidity" in sections:
            self._rigidity(arr, c, report, is_ceva)
        if "numerology" in sections:
            self._numerology(report)
        if "tables" in sections:
            self._tables(report)

        if report.ok:
            self._log("✅ All checks passed")
        else:
            failed = [check.name for check in report.checks if not check.passed]
            self._log(f"❌ Failed checks: {', '.join(failed)}")
        return report

    def _ceva_arrangement_checks(self, arr: Arrangement, report: Report) -> None:
        triples = {p.labels for p in multiple_points(arr) if p.multiplicity == 3}
        report.checks.append(
            _check(
                "ceva_triple_points",
                len(triples) == 12 and len(multiple_points(arr)) == 12,
                f"found {len(triples)} triple points",
            )
        )
        missing = unmatched_point_names(arr, reference.PRINTED_POINT_NAMES)
        for name in missing:
            labels = {int(ch) for ch in name[1:]}
            nearby = sorted(
                p.name for p in multiple_points(arr) if len(p.labels & labels) == 2
            )
            report.provenance_notes.append(
                f"Printed point name {name} matches no triple point; computed triples "
                f"sharing two of its lines: {', '.join(nearby)}"
            )

    def _invariants(
        self, arr: Arrangement, c: CharacterMap, report: Report, is_ceva: bool
    ) -> None:
        self._log("🧮 Computing Chern numbers...")
        invariants = cover_invariants(arr, c)
        report.invariants = invariants
        report.K2 = invariants.k_squared
        report.euler = invariants.euler
        report.miyaoka_yau = invariants.miyaoka_yau
        report.checks.append(
            _check(
                "noether_integrality",
                invariants.chi_holo.denominator == 1,
                f"(K^2 + e)/12 = {invariants.chi_holo}",
            )
        )

        self._log("📏 Computing intersection numbers upstairs...")
        table = upstairs_intersections(arr, c)
        report.intersections = table
        report.provenance_notes.append(
            "Ampleness is checked only through K^2 > 0 and K.C > 0 on the branch "
            "curves; no full Nakai-Moishezon verification is attempted."
        )

        if is_ceva:
            report.checks.append(
                _check(
                    "k_squared",
                    invariants.k_squared == reference.K_SQUARED,
                    f"K^2 = {invariants.k_squared}",
                )
            )
            report.checks.append(
                _check("euler", invariants.euler == reference.EULER, f"e = {invariants.euler}")
            )
            report.checks.append(
                _check("miyaoka_yau", invariants.miyaoka_yau, "K^2 != 3e")
            )
            expected = all(
                e.self_intersection == -3 and e.canonical_degree == 9 for e in table.lines
            ) and all(
                e.self_intersection == -1 and e.canonical_degree == 3
                for e in table.exceptional
            )
            report.checks.append(
                _check("upstairs_intersections", expected, "unexpected C^2, D^2, C.K or D.K")
            )
            report.checks.append(
                _check(
                    "canonical_decomposition",
                    table.canonical_decomposition == [7, 12],
                    f"3K = {table.canonical_decomposition}",
                )
            )
            report.checks.append(
                _check(
                    "obstruction_7a_12b_27",
                    not diophantine_obstruction(7, 12, 27),
                    "7a + 12b = 27 has a solution",
                )
            )
            report.checks.append(
                _check(
                    "ampleness_inequalities",
                    all(table.ampleness.values()),
                    ", ".join(k for k, v in table.ampleness.items() if not v),
                )
            )

    def _genus(
        self,
        arr: Arrangement,
        c: CharacterMap,
        report: Report,
        is_ceva: bool,
        with_bases: bool,
    ) -> None:
        chart = choose_chart(
            arr, self.config.chart.search_bound, self.config.chart.seed
        )
        self._log(f"🗺️  Affine chart: infinity line {chart.describe()}")
        self._log("🔢 Computing eigenspaces of 2-forms...")
        workers = self.config.execution.max_workers
        computed: RowResults = {}
        genus = abelian_pg(
            arr,
            c,
            chart=chart,
            max_workers=workers,
            with_forms=with_bases,
            computed=computed,
        )
        report.genus = genus
        report.quotient_pg = [quotient.pg for quotient in genus.quotients]
        report.pg = genus.pg
        report.q = genus.q

        self._log("🔎 Verifying eigenform bases on every row...")
        verification = verify_quotients(arr, c, chart, genus, computed, workers)
        report.checks.append(
            _check(
                "basis_vanishing_orders",
                not verification.bad_bases,
                "; ".join(verification.bad_bases),
            )
        )
        report.checks.append(
            _check(
                "scalar_row_consistency",
                not verification.inconsistent,
                "; ".join(verification.inconsistent),
            )
        )
        report.checks.append(
            _check("q_nonnegative", genus.q >= 0 and genus.q.denominator == 1, f"q = {genus.q}")
        )

        if is_ceva:
            report.checks.append(
                _check(
                    "quotient_pg",
                    tuple(report.quotient_pg) == reference.QUOTIENT_PG,
                    f"quotient p_g = {report.quotient_pg}",
                )
            )
            dims = tuple(tuple(q.dimensions) for q in genus.quotients)
            report.checks.append(
                _check(
                    "eigenspace_dimensions",
                    dims == reference.EIGENSPACE_DIMENSIONS,
                    f"dimensions = {dims}",
                )
            )
            report.checks.append(
                _check("pg", genus.pg == reference.TOTAL_PG, f"p_g = {genus.pg}")
            )
            report.checks.append(_check("q_zero", genus.q == 0, f"q = {genus.q}"))
            group, point, condition = reference.DUPLICATED_CONDITION
            report.provenance_notes.append(
                f"The {group} form list states '{point} in {{{condition} = 0}}' twice; "
                f"the computed dimensions {list(reference.EIGENSPACE_DIMENSIONS[3])} "
                f"fix the intended conditions."
            )

    def _rigidity(
        self, arr: Arrangement, c: CharacterMap, report: Report, is_ceva: bool
    ) -> None:
        self._log("🪞 Searching Klein transformations...")
        try:
            rigidity = rigidity_search(
                arr, c, max_workers=self.config.execution.max_workers
            )
        except UnsupportedInputError as e:
            report.checks.append(_check("rigidity", False, str(e)))
            return
        report.rigidity = rigidity
        report.rigidity_survivors = rigidity.respecting
        report.checks.append(
            _check(
                "survivors_form_group",
                rigidity.survivors_form_group,
                "surviving candidates are not closed under composition",
            )
        )
        if is_ceva:
            report.checks.append(
                _check(
                    "incidence_automorphisms",
                    rigidity.incidence_automorphisms == 432,
                    f"found {rigidity.incidence_automorphisms}",
                )
            )
            report.checks.append(
                _check(
                    "rigidity",
                    rigidity.respecting == ["identity"],
                    f"survivors: {rigidity.respecting}",
                )
            )

    def _numerology(self, report: Report) -> None:
        self._log("🔣 Evaluating closed-form invariants...")
        settings = self.config.numerology
        k_squared = settings.k_squared or report.K2 or reference.K_SQUARED
        try:
            report.numerology = numerology_report(
                k_squared=k_squared,
                m_values=tuple(settings.m_values),
                dimension=settings.dimension,
                factors=settings.factors,
            )
        except NumerologyError as e:
            report.checks.append(_check("numerology", False, str(e)))

    def _tables(self, report: Report) -> None:
        self._log("📋 Reproducing bound tables...")
        tables = bound_tables()
        report.tables = tables
        report.provenance_notes.extend(_table_notes(tables))


def _table_notes(tables: list[BoundTable]) -> list[str]:
    notes = []
    for table in tables:
        clamped = [
            f"({table.parameter_name}={cell.parameter}, j={cell.j})"
            for cell in table.cells
            if cell.clamped and cell.printed is not None
        ]
        if clamped:
            notes.append(
                f"The printed {table.name} table shows 0 where the bound is negative: "
                + ", ".join(clamped)
            )
        for cell in table.cells:
            if cell.misprint:
                notes.append(
                    f"The printed {table.name} table has {cell.printed} at "
                    f"({table.parameter_name}={cell.parameter}, j={cell.j}); "
                    f"the bound is {cell.formula}"
                )
    return notes


def run_ceva_full(
    config: ToolkitConfig,
    sections: tuple[str, ...] = SECTIONS,
    with_bases: bool = False,
) -> Report:
    """End-to-end run on the built-in Ceva arrangement and character."""
    pipeline = CoverPipeline(config)
    return pipeline.run(
        build_ceva(), ceva_character(), "builtin:ceva", sections, with_bases
    )


def run_custom(
    arrangement_file: Path,
    character_file: Path,
    config: ToolkitConfig,
    sections: tuple[str, ...] = SECTIONS,
    with_bases: bool = False,
) -> Report:
    """Same pipeline on an arrangement file and a character file."""
    arr = load_arrangement(arrangement_file)
    c = load_character(character_file)
    pipeline = CoverPipeline(config)
    source = f"{arrangement_file.name}+{character_file.name}"
    return pipeline.run(arr, c, source, sections, with_bases)
