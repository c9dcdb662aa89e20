from gstructure.exceptions import DomainError, NotARepresentationError
from gstructure.reality import (
    GroupDescriptor, GroupFamily, RealityType, achieving_weight, conjugate_weight, derived_min_dim_nonexterior,
    descends, exterior_power_weights, is_exterior_polynomial, is_form_43, is_standard, min_dim_nonexterior,
    min_dim_nonstandard, real_dim, reality_type, sphere_dimension,
)
from gstructure.weyl import LieType, defining_dimension, dim_generic
from itertools import product
from math import comb
import pytest

SO, SU, Sp = GroupFamily.SO, GroupFamily.SU, GroupFamily.Sp


def group(family, k):
    return GroupDescriptor(family, k)


class TestGroupDescriptor:
    def test_dimensions(self):
        assert group(SO, 6).dimension == 15
        assert group(SU, 4).dimension == 15
        assert group(Sp, 3).dimension == 21

    def test_algebras(self):
        assert str(group(SO, 7).algebra) == 'B3'
        assert str(group(SO, 8).algebra) == 'D4'
        assert str(group(SU, 5).algebra) == 'A4'
        assert str(group(Sp, 3).algebra) == 'C3'

    def test_sphere_dimension(self):
        assert sphere_dimension(group(SO, 15)) == 15
        assert sphere_dimension(group(SU, 11)) == 23
        assert sphere_dimension(group(Sp, 2)) == 11

    def test_adjoint_matches_group_dimension(self):
        for l in range(3, 7):
            g = group(SO, 2 * l + 1)
            assert dim_generic(g.weight(*([0, 1] + [0] * (l - 2)))) == g.dimension
        for k in range(3, 8):
            g = group(SU, k)
            coeffs = [0] * (k - 1)
            coeffs[0] = coeffs[-1] = 1
            assert dim_generic(g.weight(*coeffs)) == g.dimension

    def test_string_family(self):
        assert GroupDescriptor('Sp', 2) == group(Sp, 2)
        assert str(group(Sp, 2)) == 'Sp(2)'

    def test_size_must_be_positive(self):
        with pytest.raises(DomainError):
            group(SU, 0)


class TestRealityType:
    def test_examples(self):
        assert reality_type(group(SO, 7), group(SO, 7).weight(0, 1, 0)) is RealityType.REAL
        assert reality_type(group(SU, 4), group(SU, 4).weight(1, 0, 0)) is RealityType.COMPLEX_TYPE
        assert reality_type(group(Sp, 3), group(Sp, 3).weight(1, 0, 0)) is RealityType.QUATERNIONIC_TYPE

    def test_self_conjugate_unitary(self):
        assert reality_type(group(SU, 4), group(SU, 4).weight(0, 1, 0)) is RealityType.REAL
        assert reality_type(group(SU, 6), group(SU, 6).weight(0, 0, 1, 0, 0)) is RealityType.QUATERNIONIC_TYPE
        assert reality_type(group(SU, 6), group(SU, 6).weight(0, 0, 2, 0, 0)) is RealityType.REAL
        assert reality_type(group(SU, 8), group(SU, 8).weight(0, 0, 0, 1, 0, 0, 0)) is RealityType.REAL

    def test_symplectic_parity(self):
        g = group(Sp, 3)
        assert reality_type(g, g.weight(0, 1, 0)) is RealityType.REAL
        assert reality_type(g, g.weight(0, 0, 1)) is RealityType.QUATERNIONIC_TYPE
        assert reality_type(g, g.weight(1, 0, 1)) is RealityType.REAL

    def test_even_orthogonal(self):
        g = group(SO, 8)
        assert reality_type(g, g.weight(0, 0, 2, 0)) is RealityType.REAL
        assert reality_type(g, g.weight(0, 0, 1, 1)) is RealityType.REAL

    def test_odd_rank_even_orthogonal_is_undecided(self):
        g = group(SO, 10)
        assert reality_type(g, g.weight(0, 0, 0, 1, 1)) is RealityType.REAL
        assert reality_type(g, g.weight(0, 0, 0, 2, 0)) is RealityType.UNSPECIFIED_BY_PAPER

    def test_spin_weights_are_rejected(self):
        with pytest.raises(NotARepresentationError):
            reality_type(group(SO, 7), group(SO, 7).weight(0, 0, 1))
        with pytest.raises(NotARepresentationError):
            reality_type(group(SO, 8), group(SO, 8).weight(0, 0, 1, 0))
        assert not descends(group(SO, 9), group(SO, 9).weight(1, 0, 0, 1))

    def test_wrong_algebra(self):
        with pytest.raises(DomainError):
            reality_type(group(SO, 7), group(Sp, 3).weight(0, 1, 0))

    def test_conjugates_share_reality(self):
        for k in (4, 5, 6):
            g = group(SU, k)
            for coeffs in product(range(3), repeat=k - 1):
                w = g.weight(*coeffs)
                assert reality_type(g, w) is reality_type(g, conjugate_weight(g, w))


class TestRealDim:
    @pytest.mark.parametrize('family, k, coeffs, dim, reality', [
        (SU, 4, (0, 1, 0), 6, RealityType.REAL),
        (SU, 5, (0, 1, 0, 0), 20, RealityType.COMPLEX_TYPE),
        (Sp, 3, (0, 1, 0), 14, RealityType.REAL),
        (Sp, 3, (1, 0, 0), 12, RealityType.QUATERNIONIC_TYPE),
        (SO, 7, (0, 1, 0), 21, RealityType.REAL),
    ])
    def test_examples(self, family, k, coeffs, dim, reality):
        g = group(family, k)
        info = real_dim(g, g.weight(*coeffs))
        assert (info.real_dim, info.reality, info.real_dim_is_lower_bound) == (dim, reality, False)

    def test_lower_bound(self):
        g = group(SO, 10)
        info = real_dim(g, g.weight(0, 0, 0, 2, 0))
        assert info.real_dim == 126
        assert info.real_dim_is_lower_bound

    def test_doubled_types_are_even(self):
        g = group(SU, 5)
        for coeffs in product(range(2), repeat=4):
            info = real_dim(g, g.weight(*coeffs))
            if info.reality is not RealityType.REAL:
                assert info.real_dim % 2 == 0

    def test_dumps(self):
        g = group(SU, 5)
        assert real_dim(g, g.weight(0, 1, 0, 0)).dumps() == {
            'weight': {'algebra': 'A4', 'coeffs': [0, 1, 0, 0]},
            'reality': 'complex',
            'real_dim': 20,
            'real_dim_is_lower_bound': False,
        }


class TestBounds:
    @pytest.mark.parametrize('family, k, bound', [
        (SO, 7, 21), (SO, 8, 28), (SO, 9, 36), (SU, 5, 20), (SU, 6, 30), (Sp, 3, 14), (Sp, 4, 27),
    ])
    def test_nonstandard(self, family, k, bound):
        g = group(family, k)
        assert min_dim_nonstandard(g) == bound
        assert real_dim(g, achieving_weight(g)).real_dim == bound

    @pytest.mark.parametrize('family, k', [(SO, 6), (SU, 4), (Sp, 2)])
    def test_nonstandard_below_hypothesis(self, family, k):
        with pytest.raises(DomainError):
            min_dim_nonstandard(group(family, k))

    def test_nonexterior(self):
        assert min_dim_nonexterior(group(SO, 8)) == 3
        assert derived_min_dim_nonexterior(group(SO, 8)) == 35
        assert min_dim_nonexterior(group(SU, 8)) == 70
        assert min_dim_nonexterior(group(SU, 6)) == 20
        assert min_dim_nonexterior(group(SO, 6)) is None
        assert min_dim_nonexterior(group(SU, 5)) is None

    def test_nonexterior_rejects_symplectic(self):
        with pytest.raises(DomainError):
            min_dim_nonexterior(group(Sp, 4))

    def test_standard(self):
        g = group(SU, 5)
        assert is_standard(g, g.weight(1, 0, 0, 0))
        assert is_standard(g, g.weight(0, 0, 0, 1))
        assert not is_standard(g, g.weight(0, 1, 0, 0))


class TestExpressibility:
    def test_middle_exterior_power_fails(self):
        cert = is_form_43(group(SU, 4), group(SU, 4).weight(0, 1, 0))
        assert not cert.expressible
        assert (cert.k, cert.coefficient, cert.proof_condition) == (4, 1, True)
        assert not is_form_43(group(SU, 8), group(SU, 8).weight(0, 0, 0, 1, 0, 0, 0)).expressible

    def test_standard_is_expressible(self):
        assert is_form_43(group(SU, 4), group(SU, 4).weight(1, 0, 0)).expressible

    def test_odd_rank(self):
        cert = is_form_43(group(SU, 5), group(SU, 5).weight(0, 1, 1, 0))
        assert cert.expressible
        assert cert.branch == 'k-odd'

    def test_proof_condition_tracks_residue(self):
        cert = is_form_43(group(SU, 6), group(SU, 6).weight(0, 0, 1, 0, 0))
        assert not cert.expressible
        assert not cert.proof_condition

    def test_only_unitary(self):
        with pytest.raises(DomainError):
            is_form_43(group(SO, 8), group(SO, 8).weight(0, 1, 0, 0))

    def test_orthogonal_half_spin_squares(self):
        g = group(SO, 8)
        assert not is_exterior_polynomial(g, g.weight(0, 0, 0, 2)).expressible
        assert is_exterior_polynomial(g, g.weight(0, 0, 1, 1)).expressible
        assert is_exterior_polynomial(group(SO, 9), group(SO, 9).weight(0, 0, 0, 2)).expressible


class TestExteriorPowers:
    @pytest.mark.parametrize('family, k', [(SO, 7), (SO, 8), (SO, 9), (SO, 10), (SU, 5), (Sp, 3), (Sp, 4)])
    def test_constituents_add_up(self, family, k):
        g = group(family, k)
        n = defining_dimension(g.algebra)
        top = k if g.algebra.tag is LieType.A else g.algebra.rank
        for i in range(1, top + 1):
            total = sum(dim_generic(w) for w in exterior_power_weights(g, i))
            assert total == comb(n, i), (g, i)

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            exterior_power_weights(group(SO, 7), 4)
