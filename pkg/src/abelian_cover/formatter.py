import json

from .models import BoundTable, CheckResult, Report
from .utils.formatting import exact_value


def export_to_json(report: Report) -> str:
    """Canonical JSON: sorted keys, exact numbers, no floats."""
    return json.dumps(report.to_json_dict(), sort_keys=True, indent=2)


def _check_line(check: CheckResult) -> str:
    mark = "✓" if check.passed else "✗"
    line = f"  {mark} {check.name}"
    if check.details:
        line += f" ({'; '.join(check.details)})"
    return line


def _table_lines(table: BoundTable) -> list[str]:
    js = sorted({cell.j for cell in table.cells})
    parameters = sorted({cell.parameter for cell in table.cells})
    cells = {(cell.parameter, cell.j): cell for cell in table.cells}
    lines = [f"{table.name} table ({table.parameter_name} \\ j)"]
    lines.append(
        f"  {table.parameter_name:>4} | " + " ".join(f"{j:>8}" for j in js)
    )
    for parameter in parameters:
        rendered = []
        for j in js:
            cell = cells[(parameter, j)]
            text = str(max(cell.formula, 0))
            if cell.clamped:
                text += "c"
            if cell.misprint:
                text += f"!{cell.printed}"
            rendered.append(f"{text:>8}")
        lines.append(f"  {parameter:>4} | " + " ".join(rendered))
    return lines


def export_to_text(report: Report) -> str:
    """Readable layout of the same content as the JSON report."""
    lines = [f"Source: {report.source}"]

    summary = report.arrangement
    points = ", ".join(
        f"{count} of multiplicity {mult}"
        for mult, count in summary.multiple_points.items()
    )
    lines.append(
        f"Arrangement: {summary.line_count} lines; multiple points: {points or 'none'}; "
        f"{summary.double_points} double points"
    )
    if summary.triples:
        lines.append(f"  triple points: {' '.join(summary.triples)}")
    character = report.character
    lines.append(f"Character: (Z/{character.p})^{character.m}")
    for label, weight in enumerate(character.weights, 1):
        lines.append(f"  l{label}: {tuple(weight)}")

    if report.invariants is not None:
        inv = report.invariants
        lines.append("")
        lines.append("Chern numbers")
        lines.append(f"  |G| = {inv.degree}")
        lines.append(f"  K^2 = {inv.k_squared}")
        lines.append(f"  e = {inv.euler}")
        lines.append(f"  chi(O) = {exact_value(inv.chi_holo)}")
        lines.append(f"  K^2 = 3e: {'yes' if inv.miyaoka_yau else 'no'}")

    if report.intersections is not None:
        table = report.intersections
        lines.append("")
        lines.append("Intersections upstairs (self-intersection, K-degree)")
        for entry in table.lines + table.exceptional:
            lines.append(
                f"  {entry.component:>6}: {exact_value(entry.self_intersection):>6} "
                f"{exact_value(entry.canonical_degree):>6}"
            )
        if table.canonical_decomposition is not None:
            a, b = (exact_value(v) for v in table.canonical_decomposition)
            lines.append(f"  3K = {a}*sum(C) + {b}*sum(D)")

    if report.genus is not None:
        genus = report.genus
        lines.append("")
        lines.append(f"Geometric genus (chart: {genus.chart})")
        for quotient in genus.quotients:
            dims = " ".join(str(d) for d in quotient.dimensions)
            lines.append(
                f"  {quotient.subgroup:>10} row {tuple(quotient.row)}: "
                f"dims [{dims}] p_g = {quotient.pg}"
            )
            for j, forms in enumerate(quotient.forms):
                for form in forms:
                    lines.append(f"      j={j}: {form}")
        lines.append(f"  p_g = {genus.pg}, q = {exact_value(genus.q)}")

    if report.rigidity is not None:
        rigidity = report.rigidity
        lines.append("")
        lines.append("Klein transformations")
        lines.append(f"  incidence automorphisms: {rigidity.incidence_automorphisms}")
        lines.append(
            f"  realizable: {rigidity.realizable} "
            f"({rigidity.realizable_holomorphic} holomorphic, "
            f"{rigidity.realizable_antiholomorphic} antiholomorphic)"
        )
        lines.append(f"  respecting the covering: {', '.join(rigidity.respecting)}")
        for note in rigidity.notes:
            lines.append(f"  - {note}")

    if report.numerology is not None:
        numerology = report.numerology
        lines.append("")
        lines.append("Generic projections by mK")
        lines.append(
            "     K^2    m   deg f      deg B      genus      cusps      nodes"
        )
        for curve in numerology.branch_curves:
            marker = " *" if curve.extrapolated else ""
            lines.append(
                f"  {curve.k_squared:>6} {curve.m:>4} {curve.covering_degree:>7} "
                f"{curve.curve_degree:>10} {curve.geometric_genus:>10} "
                f"{curve.cusp_count:>10} {curve.node_count:>10}{marker}"
            )
        lines.append(
            f"  dimension {numerology.dimension}: "
            f"{numerology.deformation_classes} deformation classes, "
            f"homeotopy order {numerology.homeotopy_order}, "
            f"{numerology.product_classes} product classes"
        )
        if numerology.self_conjugate_classes:
            pairs = ", ".join(f"X_{{{p},{q}}}" for p, q in numerology.self_conjugate_classes)
            lines.append(f"  self-conjugate: {pairs}")

    if report.tables:
        lines.append("")
        lines.append("Bound tables (c = printed as 0 over a negative bound, !n = printed n)")
        for table in report.tables:
            lines.extend(_table_lines(table))

    lines.append("")
    lines.append("Checks")
    for check in report.validation + report.checks:
        lines.append(_check_line(check))

    if report.provenance_notes:
        lines.append("")
        lines.append("Provenance notes")
        for note in report.provenance_notes:
            lines.append(f"  - {note}")

    return "\n".join(lines)
