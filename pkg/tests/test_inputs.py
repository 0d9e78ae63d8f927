import json
from pathlib import Path

import pytest
from abelian_cover.arrangement import build_ceva
from abelian_cover.cover import ceva_character
from abelian_cover.errors import CoincidentLinesError, InputFileError, UnsupportedInputError
from abelian_cover.exactmath import MU
from abelian_cover.inputs import (
    arrangement_to_dict,
    character_to_dict,
    dump_arrangement,
    dump_character,
    load_arrangement,
    load_character,
    parse_arrangement,
    parse_character,
)

DATA_DIR = Path(__file__).parent.parent / "data"


class TestArrangementFiles:
    """Test arrangement JSON files."""

    def test_bundled_file(self):
        """Test that the bundled Ceva file is the built-in arrangement."""
        arr = load_arrangement(DATA_DIR / "ceva_arrangement.json")
        assert arr.lines == build_ceva().lines

    def test_round_trip(self, tmp_path):
        """Test that dump then load gives back the same lines."""
        path = tmp_path / "ceva.json"
        dump_arrangement(build_ceva(), path)
        assert load_arrangement(path).lines == build_ceva().lines
        assert json.loads(path.read_text()) == arrangement_to_dict(build_ceva())

    def test_unnormalized_file_round_trip(self, tmp_path):
        """Test that a file with unscaled coefficients is written back byte for byte."""
        data = {
            "lines": [
                [[2, 1, 0, 1], [0, 1, 0, 1], [0, 1, 0, 1]],
                [[0, 1, 0, 1], [3, 2, 0, 1], [0, 1, 1, 1]],
                [[0, 1, 0, 1], [0, 1, 0, 1], [-1, 1, 0, 1]],
            ]
        }
        source = tmp_path / "scaled.json"
        source.write_text(json.dumps(data, indent=2))
        arr = load_arrangement(source)
        assert arr.line(1).coefficients[0] == 1
        target = tmp_path / "copy.json"
        dump_arrangement(arr, target)
        assert target.read_text() == source.read_text()

    def test_encoding(self):
        """Test the [a_num, a_den, b_num, b_den] encoding of 1 - mu."""
        line = arrangement_to_dict(build_ceva())["lines"][1]
        assert line[2] == [1, 1, -1, 1]

    def test_rational_coefficients(self):
        """Test fractions and mu in parsed coefficients."""
        arr = parse_arrangement(
            {
                "lines": [
                    [[2, 3, 0, 1], [0, 1, 0, 1], [0, 1, 0, 1]],
                    [[0, 1, 0, 1], [1, 1, 0, 1], [0, 1, 1, 1]],
                    [[0, 1, 0, 1], [0, 1, 0, 1], [1, 1, 0, 1]],
                ]
            }
        )
        assert arr.line(1).coefficients[0] == 1
        assert arr.line(2).coefficients[2] == MU

    def test_missing_file(self, tmp_path):
        """Test a path that does not exist."""
        with pytest.raises(InputFileError):
            load_arrangement(tmp_path / "missing.json")

    def test_malformed_json(self, tmp_path):
        """Test a file that is not JSON."""
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(InputFileError):
            load_arrangement(path)

    def test_bad_schema(self):
        """Test lines with the wrong number of coefficients or zero denominators."""
        with pytest.raises(InputFileError):
            parse_arrangement({"lines": [[[1, 1, 0, 1], [0, 1, 0, 1]]]})
        with pytest.raises(InputFileError):
            parse_arrangement({"lines": [[[1, 0, 0, 1], [0, 1, 0, 1], [0, 1, 0, 1]]]})
        with pytest.raises(InputFileError):
            parse_arrangement({"planes": []})

    def test_coincident_lines(self):
        """Test that duplicate lines keep their specific error."""
        line = [[1, 1, 0, 1], [0, 1, 0, 1], [0, 1, 0, 1]]
        with pytest.raises(CoincidentLinesError):
            parse_arrangement({"lines": [line, line]})


class TestCharacterFiles:
    """Test character JSON files."""

    def test_bundled_file(self):
        """Test that the bundled character file is the built-in character."""
        assert load_character(DATA_DIR / "ceva_character.json") == ceva_character()

    def test_round_trip(self, tmp_path):
        """Test dump then load."""
        path = tmp_path / "character.json"
        dump_character(ceva_character(), path)
        assert load_character(path) == ceva_character()
        assert character_to_dict(ceva_character())["weights"][3] == [3, 3]

    def test_bad_schema(self):
        """Test a character file missing p."""
        with pytest.raises(InputFileError):
            parse_character({"m": 2, "weights": [[1, 0]]})

    def test_non_prime(self):
        """Test that a non-prime p surfaces as unsupported input."""
        with pytest.raises(UnsupportedInputError):
            parse_character({"p": 6, "m": 1, "weights": [[1], [5]]})
