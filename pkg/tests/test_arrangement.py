import pytest
from abelian_cover.arrangement import (
    ProjLine,
    affine_plane_labels,
    build_arrangement,
    build_ceva,
    concurrent_triples,
    double_points,
    incidence_profile,
    intersect,
    multiple_points,
    unmatched_point_names,
)
from abelian_cover.errors import CoincidentLinesError
from abelian_cover.exactmath import MU, ONE, ZERO, BiPoly


class TestCevaArrangement:
    """Test the combinatorics of the Ceva arrangement."""

    def test_twelve_triple_points(self, ceva):
        """Test that all 36 pairs meet in 12 triple points and nowhere else."""
        points = multiple_points(ceva)
        assert len(ceva) == 9
        assert len(points) == 12
        assert all(p.multiplicity == 3 for p in points)
        assert double_points(ceva) == []
        assert len(ceva.pair_map) == 36

    def test_four_points_per_line(self, ceva):
        """Test that each line carries four triple points."""
        assert incidence_profile(ceva) == [4] * 9

    def test_coordinate_points(self, ceva):
        """Test the triples through the coordinate vertices."""
        triples = concurrent_triples(ceva)
        for labels in ({1, 2, 3}, {4, 5, 6}, {7, 8, 9}):
            assert frozenset(labels) in triples
        vertex = ceva.pair_map[frozenset((1, 2))]
        assert vertex.coordinates == (ZERO, ONE, ZERO)

    def test_triples_are_affine_lines(self, ceva):
        """Test that every concurrent triple is an affine line of (Z/3)^2."""
        grid = affine_plane_labels()
        triples = concurrent_triples(ceva)
        assert len(triples) == 12
        for triple in triples:
            sx = sum(grid[label][0] for label in triple) % 3
            sy = sum(grid[label][1] for label in triple) % 3
            assert (sx, sy) == (0, 0)

    def test_point_p147(self, ceva):
        """Test a mixed triple point by hand: (1 : mu^2 : 1)."""
        triples = concurrent_triples(ceva)
        assert frozenset((1, 4, 7)) in triples
        point = ceva.pair_map[frozenset((1, 4))]
        assert point.coordinates == (ONE, MU - 1, ONE)

    def test_printed_point_names(self, ceva):
        """Test that the name p349 matches no triple point."""
        names = ["p349", "p789", "p147", "p123"]
        assert unmatched_point_names(ceva, names) == ["p349"]

    def test_point_names(self, ceva):
        """Test point naming by sorted labels."""
        names = {p.name for p in multiple_points(ceva)}
        assert {"p123", "p456", "p789", "p147"} <= names

    def test_product_of_lines(self, ceva):
        """Test that the nine forms multiply to (x1^3 - x2^3)(x2^3 - x3^3)(x3^3 - x1^3) up to scale."""
        product = BiPoly.constant(1)
        for line in ceva.lines:
            product = product * BiPoly.linear(*line.coefficients)
        x = BiPoly.linear(1, 0, 0)
        y = BiPoly.linear(0, 1, 0)
        one = BiPoly.constant(1)
        target = (x**3 - y**3) * (y**3 - one) * (one - x**3)
        assert product.degree == 9
        assert product.is_proportional(target)

    def test_points_off_other_lines(self, ceva):
        """Test that each point lies exactly on its incident lines."""
        for point in ceva.points:
            for line in ceva.lines:
                value = line.evaluate(point.point.coordinates)
                assert value.is_zero() == (line.label in point.labels), (point.name, line.name)

    def test_deterministic(self, ceva):
        """Test that repeated construction gives identical structures."""
        again = build_ceva()
        assert again == ceva
        assert [p.name for p in again.points] == [p.name for p in ceva.points]


class TestBuildArrangement:
    """Test arrangement construction."""

    def test_line_normalization(self):
        """Test that coefficients are scaled to a leading 1."""
        line = ProjLine.from_coefficients([0, 2, 2 * MU], 1)
        assert line.coefficients == (ZERO, ONE, MU)
        assert line.original_coefficients == (0, 2, 2 * MU)
        assert line.name == "l1"

    def test_coincident_lines(self):
        """Test that proportional lines are rejected."""
        with pytest.raises(CoincidentLinesError):
            build_arrangement([[1, 0, 0], [2, 0, 0], [0, 1, 0]])

    def test_intersect(self):
        """Test the meet of two coordinate lines."""
        first = ProjLine.from_coefficients([1, 0, 0], 1)
        second = ProjLine.from_coefficients([0, 1, 0], 2)
        assert intersect(first, second).coordinates == (ZERO, ZERO, ONE)

    def test_generic_lines(self):
        """Test four general lines: six double points, no multiple points."""
        arr = build_arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
        assert multiple_points(arr) == []
        assert len(double_points(arr)) == 6

    def test_custom_labels(self):
        """Test explicit labels and lookup."""
        arr = build_arrangement([[1, 0, 0], [0, 1, 0], [0, 0, 1]], labels=[4, 5, 6])
        assert arr.labels == (4, 5, 6)
        assert arr.line(5).coefficients == (ZERO, ONE, ZERO)
        with pytest.raises(KeyError):
            arr.line(1)
        with pytest.raises(ValueError):
            build_arrangement([[1, 0, 0]], labels=[1, 2])

    def test_conjugate_coefficients(self, ceva):
        """Test that conjugation swaps l2 and l3."""
        assert ceva.line(2).conjugate_coefficients() == ceva.line(3).coefficients
        assert ceva.line(1).conjugate_coefficients() == ceva.line(1).coefficients
