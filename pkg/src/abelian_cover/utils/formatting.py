from fractions import Fraction

from ..exactmath import BiPoly, CycloNum


def exact_value(value: Fraction | int) -> int | str:
    """Integers stay integers; other rationals become "num/den" strings."""
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return f"{value.numerator}/{value.denominator}"


def format_cyclo(value: CycloNum) -> str:
    """Render a + b*mu compactly, e.g. "-1+mu" or "2/3*mu"."""
    return str(value)


def format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_bipoly(poly: BiPoly) -> str:
    """Render a polynomial with terms by descending degree."""
    if poly.is_zero():
        return "0"
    terms = sorted(poly, key=lambda item: (-(item[0][0] + item[0][1]), -item[0][0]))
    rendered = []
    for (i, j), coeff in terms:
        mono = format_monomial(i, j)
        text = str(coeff)
        if not mono:
            rendered.append(f"({text})" if not coeff.is_rational() else text)
        elif coeff == 1:
            rendered.append(mono)
        elif coeff == -1:
            rendered.append(f"-{mono}")
        elif coeff.is_rational():
            rendered.append(f"{text}*{mono}")
        else:
            rendered.append(f"({text})*{mono}")
    return " + ".join(rendered).replace("+ -", "- ")


def format_product(exponents: dict[int, int]) -> str:
    """Render a product of line forms, e.g. {4: 2, 8: 1} -> "l4^2*l8"."""
    factors = [
        f"l{label}" if power == 1 else f"l{label}^{power}"
        for label, power in sorted(exponents.items())
        if power
    ]
    return "*".join(factors) if factors else "1"
