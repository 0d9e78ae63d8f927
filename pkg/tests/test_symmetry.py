import pytest
from abelian_cover.cover import CharacterMap, quotient_rows
from abelian_cover.errors import UnsupportedInputError
from abelian_cover.exactmath import ExactMatrix
from abelian_cover.symmetry import (
    KleinCandidate,
    LinePermutation,
    act_on_row,
    diophantine_obstruction,
    general_position_anchor,
    incidence_automorphisms,
    is_closed,
    maps_rows_into_table,
    profile_filter_rejects,
    realizable_candidates,
    realize,
    respects_covering,
    rigidity_search,
)


class TestLinePermutation:
    """Test permutations of line labels."""

    def test_compose_and_inverse(self):
        """Test composition order and inverses."""
        swap = LinePermutation((2, 1, 3))
        cycle = LinePermutation((2, 3, 1))
        assert swap.compose(cycle)(1) == swap(cycle(1))
        assert cycle.compose(cycle.inverse()).is_identity
        assert LinePermutation.identity(3).is_identity

    def test_str(self):
        """Test cycle notation."""
        assert str(LinePermutation((2, 1, 4, 3))) == "(1 2)(3 4)"
        assert str(LinePermutation.identity(4)) == "identity"
        assert LinePermutation((2, 3, 1)).cycles() == [(1, 2, 3)]


class TestIncidence:
    """Test combinatorial automorphisms of the Ceva arrangement."""

    def test_count(self, ceva):
        """Test that the incidence group is AGL(2, 3) of order 432."""
        perms = incidence_automorphisms(ceva)
        assert len(perms) == 432
        assert len(set(perms)) == 432
        assert LinePermutation.identity(9) in perms

    def test_anchor(self, ceva):
        """Test the first four lines in general position."""
        assert general_position_anchor(ceva) == (1, 2, 4, 5)


class TestRealize:
    """Test solving for projective matrices."""

    def test_identity(self, ceva):
        """Test that the identity permutation is realized by the identity matrix."""
        cand = realize(LinePermutation.identity(9), True, ceva)
        assert cand is not None
        assert cand.matrix == ExactMatrix.identity(3)

    def test_conjugation_needs_swap(self, ceva):
        """Test that plain conjugation swaps l2 and l3, so the identity is not antiholomorphic."""
        assert realize(LinePermutation.identity(9), False, ceva) is None

    def test_bad_anchor(self, ceva):
        """Test that a concurrent anchor is rejected."""
        with pytest.raises(UnsupportedInputError):
            realize(LinePermutation.identity(9), True, ceva, anchor=(1, 2, 3, 4))

    def test_no_anchor(self, three_lines):
        """Test that three lines leave the projectivity undetermined."""
        with pytest.raises(UnsupportedInputError, match="general position"):
            general_position_anchor(three_lines)

    def test_realizable_split(self, ceva):
        """Test 216 holomorphic and 216 antiholomorphic realizations."""
        perms, candidates = realizable_candidates(ceva)
        assert len(perms) == 432
        assert sum(1 for c in candidates if c.holomorphic) == 216
        assert sum(1 for c in candidates if not c.holomorphic) == 216
        assert is_closed(candidates)

    def test_second_anchor(self, ceva):
        """Test that another general-position anchor realizes the same candidates."""
        _, first = realizable_candidates(ceva)
        _, second = realizable_candidates(ceva, anchor=(2, 3, 7, 8))
        assert [(c.key(), c.matrix) for c in first] == [(c.key(), c.matrix) for c in second]


class TestCoveringAction:
    """Test the action of candidates on character rows."""

    def test_act_on_row(self):
        """Test psi -> (-1)^kl psi o g_*."""
        swap = LinePermutation((2, 1, 3))
        holo = KleinCandidate(swap, holomorphic=True)
        anti = KleinCandidate(swap, holomorphic=False)
        assert act_on_row(holo, (1, 2, 2), 5) == (2, 1, 2)
        assert act_on_row(anti, (1, 2, 2), 5) == (3, 4, 3)

    def test_composition_flag(self):
        """Test that two antiholomorphic maps compose to a holomorphic one."""
        anti = KleinCandidate(LinePermutation.identity(3), holomorphic=False)
        assert anti.compose(anti).holomorphic
        assert anti.describe() == "identity (antiholomorphic)"

    def test_identity_respects(self, ceva_char):
        """Test that the identity respects any covering."""
        fam = quotient_rows(ceva_char)
        cand = KleinCandidate(LinePermutation.identity(9), holomorphic=True)
        assert not profile_filter_rejects(cand, fam)
        assert respects_covering(cand, fam)

    def test_profile_filter_is_sound(self, ceva, ceva_char):
        """Test that every candidate the profile filter rejects also fails the full row test."""
        fam = quotient_rows(ceva_char)
        _, candidates = realizable_candidates(ceva)
        assert len(candidates) == 432
        for cand in candidates:
            full = maps_rows_into_table(cand, fam)
            if profile_filter_rejects(cand, fam):
                assert not full, cand.describe()
            assert respects_covering(cand, fam) == full

    def test_ceva_rigidity(self, ceva, ceva_char):
        """Test that only the identity survives for the (Z/5)^2 character."""
        report = rigidity_search(ceva, ceva_char, max_workers=2)
        assert report.incidence_automorphisms == 432
        assert report.realizable == 432
        assert report.realizable_holomorphic == 216
        assert report.respecting == ["identity"]
        assert report.survivors_form_group
        assert report.deck_group_order == 25

    def test_symmetric_character(self, ceva):
        """Test that the all-ones Z/3 character is respected by every candidate."""
        c = CharacterMap(p=3, m=1, weights=((1,),) * 9)
        report = rigidity_search(ceva, c)
        assert len(report.respecting) == 432
        assert report.survivors_form_group
        assert report.deck_group_order == 3


class TestDiophantine:
    """Test the non-negative solutions of x a + y b = t."""

    def test_no_solution(self):
        """Test that 7a + 12b = 27 has no solution."""
        assert diophantine_obstruction(7, 12, 27) == []

    def test_solutions(self):
        """Test small solvable cases."""
        assert diophantine_obstruction(7, 12, 19) == [(1, 1)]
        assert diophantine_obstruction(1, 1, 2) == [(0, 2), (1, 1), (2, 0)]
        assert diophantine_obstruction(2, 3, -1) == []

    def test_bad_coefficients(self):
        """Test that coefficients must be positive."""
        with pytest.raises(ValueError):
            diophantine_obstruction(0, 12, 27)
