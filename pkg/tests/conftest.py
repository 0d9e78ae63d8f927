import json

import pytest
from abelian_cover.arrangement import build_arrangement, build_ceva
from abelian_cover.config import (
    ChartConfig,
    ExecutionConfig,
    NumerologyConfig,
    ReportConfig,
    ToolkitConfig,
)
from abelian_cover.cover import CharacterMap, ceva_character
from abelian_cover.genus import choose_chart


@pytest.fixture
def sample_config():
    """Toolkit configuration with defaults spelled out."""
    return ToolkitConfig(
        chart=ChartConfig(search_bound=7, seed=0),
        execution=ExecutionConfig(max_workers=1),
        report=ReportConfig(output_format="json", verbose=False),
        numerology=NumerologyConfig(m_values=[5]),
    )


@pytest.fixture
def ceva():
    """The nine-line Ceva arrangement."""
    return build_ceva()


@pytest.fixture
def ceva_char():
    """The (Z/5)^2 character of the Ceva cover."""
    return ceva_character()


@pytest.fixture
def ceva_chart(ceva):
    """First valid affine chart for the Ceva arrangement."""
    return choose_chart(ceva)


@pytest.fixture
def three_lines():
    """Coordinate triangle x1 x2 x3 = 0."""
    return build_arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@pytest.fixture
def three_lines_char():
    """(Z/5)^2 character on the coordinate triangle; the cover is the plane itself."""
    return CharacterMap(p=5, m=2, weights=((1, 0), (0, 1), (4, 4)))


@pytest.fixture
def three_lines_files(tmp_path):
    """Arrangement and character files for the coordinate triangle."""
    one, zero = [1, 1, 0, 1], [0, 1, 0, 1]
    arrangement = tmp_path / "triangle.json"
    arrangement.write_text(
        json.dumps({"lines": [[one, zero, zero], [zero, one, zero], [zero, zero, one]]})
    )
    character = tmp_path / "triangle_character.json"
    character.write_text(
        json.dumps({"p": 5, "m": 2, "weights": [[1, 0], [0, 1], [4, 4]]})
    )
    return arrangement, character
