import pytest
from abelian_cover.cover import (
    CharacterMap,
    CharacterRow,
    is_prime,
    quotient_rows,
    rank_mod_p,
    require_valid,
    validate_character,
    weight_profile,
)
from abelian_cover.errors import InvalidCharacterError, UnsupportedInputError
from abelian_cover.reference import PRINTED_ROWS, QUOTIENT_EQUATIONS, SUBGROUP_GENERATORS


class TestCharacterMap:
    """Test character data and its validation."""

    def test_ceva_character_valid(self, ceva, ceva_char):
        """Test that the Ceva character passes every check."""
        report = validate_character(ceva_char, ceva)
        assert report.ok
        assert [check.name for check in report.checks] == [
            "surjectivity",
            "branch_degree",
            "lines_branched",
            "smooth_nodes",
        ]
        assert ceva_char.group_order == 25
        assert ceva_char.total() == (0, 0)

    def test_exceptional_weight(self, ceva_char):
        """Test the weight of the exceptional curve over p147."""
        assert ceva_char.exceptional_weight({1, 4, 7}) == (4, 0)

    def test_non_prime(self):
        """Test that a non-prime p is unsupported."""
        with pytest.raises(UnsupportedInputError):
            CharacterMap(p=4, m=1, weights=((1,), (3,)))

    def test_is_prime(self):
        """Test primality on small values, prime squares and a large prime."""
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
        assert not any(is_prime(q * q) for q in (5, 7, 11, 10007))
        assert is_prime(1000003)
        assert not is_prime(1000003 * 1000033)

    def test_wrong_weight_length(self):
        """Test that weights must have m entries."""
        with pytest.raises(UnsupportedInputError):
            CharacterMap(p=5, m=2, weights=((1, 0), (1,)))

    def test_zero_weight_named(self, ceva):
        """Test that a zero line weight is reported with the line name."""
        weights = ((1, 1), (1, 0), (1, 1), (3, 3), (0, 0), (0, 1), (0, 1), (0, 2), (1, 1))
        c = CharacterMap(p=5, m=2, weights=weights)
        report = validate_character(c, ceva)
        failed = {check.name: check.details for check in report.failed}
        assert failed["lines_branched"] == ["l5 has weight 0"]
        with pytest.raises(InvalidCharacterError) as excinfo:
            require_valid(c, ceva)
        assert "lines_branched: l5 has weight 0" in excinfo.value.failures

    def test_not_surjective(self, three_lines):
        """Test a character whose weights span a line."""
        c = CharacterMap(p=5, m=2, weights=((1, 0), (2, 0), (2, 0)))
        report = validate_character(c, three_lines)
        assert "surjectivity" in [check.name for check in report.failed]

    def test_singular_node(self, three_lines):
        """Test that dependent weights at a double point are rejected."""
        c = CharacterMap(p=5, m=2, weights=((1, 0), (2, 0), (2, 0)))
        report = validate_character(c, three_lines)
        smooth = next(check for check in report.checks if check.name == "smooth_nodes")
        assert not smooth.passed
        assert "(l1, l2)" in smooth.details

    def test_length_mismatch(self, ceva):
        """Test that a character must have one weight per line."""
        c = CharacterMap(p=5, m=2, weights=((1, 0), (0, 1), (4, 4)))
        with pytest.raises(UnsupportedInputError):
            validate_character(c, ceva)


class TestCharacterRow:
    """Test single cyclic rows."""

    def test_zero_row(self):
        """Test that the zero row is rejected."""
        with pytest.raises(InvalidCharacterError):
            CharacterRow(5, (0, 0, 0))

    def test_row_sum(self):
        """Test that the branch degree must be divisible by p."""
        with pytest.raises(InvalidCharacterError):
            CharacterRow(5, (1, 1, 1))

    def test_row_properties(self):
        """Test branch degree, n and scaling."""
        row = CharacterRow(5, (1, 1, 1, 3, 3, 0, 0, 0, 1))
        assert row.branch_degree == 10
        assert row.n == 2
        assert row.branch_labels() == (1, 2, 3, 4, 5, 9)
        assert row.scaled(2).entries == (2, 2, 2, 1, 1, 0, 0, 0, 2)

    def test_weight_profile(self):
        """Test counts of each residue."""
        row = CharacterRow(5, (1, 1, 1, 3, 3, 0, 0, 0, 1))
        assert weight_profile(row) == (3, 4, 0, 2, 0)


class TestQuotientRows:
    """Test the enumeration of cyclic quotients."""

    def test_ceva_families(self, ceva_char):
        """Test 6 subgroups with 4 rows each, matching the printed table."""
        family = quotient_rows(ceva_char)
        assert len(family.subgroups) == 6
        assert len(family.all_rows()) == 24
        for subgroup, printed in zip(family.subgroups, PRINTED_ROWS, strict=True):
            assert {row.entries for row in subgroup.rows} == set(printed)

    def test_canonical_rows(self, ceva_char):
        """Test that canonical representatives give the quotient equations."""
        family = quotient_rows(ceva_char)
        rows = tuple(subgroup.canonical_row.entries for subgroup in family.subgroups)
        assert rows == QUOTIENT_EQUATIONS

    def test_generators(self, ceva_char):
        """Test subgroup generators and labels."""
        family = quotient_rows(ceva_char)
        generators = tuple(subgroup.generator for subgroup in family.subgroups)
        assert generators == SUBGROUP_GENERATORS
        assert family.subgroups[2].label == "((4,1))"

    def test_rank_one(self, ceva):
        """Test a Z/3 character: one family with two rows."""
        c = CharacterMap(p=3, m=1, weights=((1,),) * 9)
        family = quotient_rows(c)
        assert len(family.subgroups) == 1
        assert [row.entries for row in family.subgroups[0].rows] == [(1,) * 9, (2,) * 9]
        assert family.subgroups[0].label == "ker(1)"

    def test_rank_mod_p(self):
        """Test rank over Z/p."""
        assert rank_mod_p([(1, 2), (2, 4)], 5) == 1
        assert rank_mod_p([(1, 2), (2, 3)], 5) == 2
        assert rank_mod_p([], 5) == 0
