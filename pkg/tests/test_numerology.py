import pytest
import sympy as sp
from abelian_cover.errors import NumerologyError
from abelian_cover.numerology import (
    FAKE_PROJECTIVE_PLANE,
    MIYAOKA_YAU,
    branch_curve_invariants,
    branch_curve_polynomials,
    cusp_formula_holds,
    default_factors,
    deformation_class_count,
    embedding_dimension,
    general_cusp_count,
    homeotopy_order,
    numerology_report,
    product_class_count,
    self_conjugate_classes,
)


class TestBranchCurves:
    """Test invariants of branch curves of generic projections."""

    def test_ceva_cover_m5(self):
        """Test the branch curve of the projection given by 5K on the Ceva cover."""
        data = branch_curve_invariants(333, 5)
        assert data.covering_degree == 8325
        assert data.curve_degree == 26640
        assert data.geometric_genus == 45289
        assert data.cusp_count == 115440
        assert data.node_count == 354644112
        assert data.embedding_dimension == 3366
        assert data.extrapolated is False

    def test_fake_projective_plane_m5(self):
        """Test the same invariants for K^2 = 9."""
        data = branch_curve_invariants(9, 5)
        assert data.covering_degree == 225
        assert data.curve_degree == 720
        assert data.geometric_genus == 1225
        assert data.cusp_count == 3120
        assert data.node_count == 253776

    def test_extrapolated(self):
        """Test that other values of K^2 are flagged."""
        assert branch_curve_invariants(27, 5).extrapolated is True

    def test_domain_errors(self):
        """Test m < 5, non-positive K^2 and 3 not dividing K^2."""
        with pytest.raises(NumerologyError):
            branch_curve_invariants(333, 4)
        with pytest.raises(NumerologyError):
            branch_curve_invariants(0, 5)
        with pytest.raises(NumerologyError):
            branch_curve_invariants(10, 5)

    def test_cusps_match_general_formula(self):
        """Test 12L^2 + 9LK + 2K^2 - e against the printed cusp form."""
        for m in range(5, 12):
            ceva = branch_curve_invariants(333, m)
            fake = branch_curve_invariants(9, m)
            assert general_cusp_count(333, 111, m) == ceva.cusp_count
            assert general_cusp_count(9, 3, m) == fake.cusp_count

    def test_symbolic_identity(self):
        """Test the cusp identity as a polynomial in m."""
        assert cusp_formula_holds(333)
        assert cusp_formula_holds(9)

    def test_polynomials_agree(self):
        """Test that the symbolic forms evaluate to the integer invariants."""
        polys = branch_curve_polynomials(333)
        m = sp.symbols("m", integer=True, positive=True)
        for value in (5, 6, 9):
            data = branch_curve_invariants(333, value)
            assert polys["node_count"].subs(m, value) == data.node_count
            assert polys["geometric_genus"].subs(m, value) == data.geometric_genus

    def test_embedding_dimension(self):
        """Test r_m = chi + m(m-1)K^2/2 - 1."""
        assert embedding_dimension(9, 2) == 1 + 9 - 1
        assert embedding_dimension(10, 2) is None
        with pytest.raises(NumerologyError):
            embedding_dimension(9, 1)


class TestDeformationClasses:
    """Test deformation classes of products of rigid surfaces."""

    def test_class_count(self):
        """Test ([n/4] + 1)([n/2] - [n/4] + 1)."""
        assert deformation_class_count(2) == 2
        assert deformation_class_count(4) == 4
        assert deformation_class_count(8) == 9
        with pytest.raises(NumerologyError):
            deformation_class_count(1)

    def test_default_factors_realize_count(self):
        """Test that the default factor split reaches the component count."""
        for n in range(2, 13):
            a, b = default_factors(n)
            assert product_class_count(a, b) == deformation_class_count(n)

    def test_self_conjugate(self):
        """Test that only even factor counts give a self-conjugate class."""
        assert self_conjugate_classes(2, 4) == [(1, 2)]
        assert self_conjugate_classes(1, 2) == []
        assert self_conjugate_classes(0, 0) == [(0, 0)]

    def test_homeotopy_order(self):
        """Test |G^n x| S_n|."""
        assert homeotopy_order(1) == 25
        assert homeotopy_order(2) == 1250
        with pytest.raises(NumerologyError):
            homeotopy_order(0)

    def test_presets(self):
        """Test seed surface presets."""
        assert MIYAOKA_YAU.chi_holo == 37
        assert FAKE_PROJECTIVE_PLANE.chi_holo == 1
        assert MIYAOKA_YAU.k_squared == 3 * MIYAOKA_YAU.euler

    def test_report(self):
        """Test the assembled report."""
        report = numerology_report(k_squared=9, m_values=(5, 6), dimension=8)
        assert [curve.m for curve in report.branch_curves] == [5, 6]
        assert report.deformation_classes == 9
        assert report.product_classes == 9
        assert report.homeotopy_order == 25**4 * 24
        assert report.self_conjugate_classes == [[1, 1]]
