import json
from fractions import Fraction
from pathlib import Path

from pydantic import BaseModel, ValidationError, field_validator

from .arrangement import Arrangement, build_arrangement
from .cover import CharacterMap
from .errors import CoverError, InputFileError
from .exactmath import CycloNum


class ArrangementFile(BaseModel):
    """{"lines": [[[a_num, a_den, b_num, b_den], x3], ...]}, each coefficient a + b*mu."""

    lines: list[list[list[int]]]

    @field_validator("lines")
    @classmethod
    def validate_lines(cls, v: list[list[list[int]]]) -> list[list[list[int]]]:
        for index, line in enumerate(v, 1):
            if len(line) != 3:
                raise ValueError(f"Line {index} must have 3 coefficients")
            for coeff in line:
                if len(coeff) != 4:
                    raise ValueError(
                        f"Line {index}: coefficients are [a_num, a_den, b_num, b_den]"
                    )
                if coeff[1] == 0 or coeff[3] == 0:
                    raise ValueError(f"Line {index}: zero denominator")
        return v


class CharacterFile(BaseModel):
    """{"p": 5, "m": 2, "weights": [[1, 1], [1, 0], ...]}."""

    p: int
    m: int
    weights: list[list[int]]


def _read_json(path: Path) -> object:
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise InputFileError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise InputFileError(f"Malformed JSON in {path}: {e}") from e


def _decode(coeff: list[int]) -> CycloNum:
    return CycloNum(Fraction(coeff[0], coeff[1]), Fraction(coeff[2], coeff[3]))


def _encode(value: CycloNum) -> list[int]:
    return [value.a.numerator, value.a.denominator, value.b.numerator, value.b.denominator]


def parse_arrangement(data: object) -> Arrangement:
    try:
        parsed = ArrangementFile.model_validate(data)
    except ValidationError as e:
        raise InputFileError(f"Invalid arrangement file: {e}") from e
    rows = [[_decode(coeff) for coeff in line] for line in parsed.lines]
    try:
        return build_arrangement(rows)
    except ValueError as e:
        if isinstance(e, CoverError):
            raise
        raise InputFileError(f"Invalid arrangement file: {e}") from e


def load_arrangement(path: Path) -> Arrangement:
    """Load an arrangement; lines are labelled 1..n in file order."""
    return parse_arrangement(_read_json(path))


def arrangement_to_dict(arr: Arrangement) -> dict[str, list[list[list[int]]]]:
    return {
        "lines": [[_encode(c) for c in line.original_coefficients] for line in arr.lines]
    }


def dump_arrangement(arr: Arrangement, path: Path) -> None:
    with open(path, "w") as f:
        json.dump(arrangement_to_dict(arr), f, indent=2)


def parse_character(data: object) -> CharacterMap:
    try:
        parsed = CharacterFile.model_validate(data)
    except ValidationError as e:
        raise InputFileError(f"Invalid character file: {e}") from e
    return CharacterMap(
        p=parsed.p, m=parsed.m, weights=tuple(tuple(w) for w in parsed.weights)
    )


def load_character(path: Path) -> CharacterMap:
    return parse_character(_read_json(path))


def character_to_dict(c: CharacterMap) -> dict[str, object]:
    return {"p": c.p, "m": c.m, "weights": [list(w) for w in c.weights]}


def dump_character(c: CharacterMap, path: Path) -> None:
    with open(path, "w") as f:
        json.dump(character_to_dict(c), f, indent=2)
