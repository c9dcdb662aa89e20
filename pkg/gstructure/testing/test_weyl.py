from gstructure.exceptions import DomainError
from gstructure.weyl import (
    CLOSED_FORMS, AlgebraType, DominantWeight, LieType, closed_form_dim, closed_form_weight,
    defining_dimension, delta_vector, dim_generic, dim_specialized, positive_roots, weight_to_epsilon,
)
from itertools import product
from math import comb
import random
import pytest

ALGEBRAS = [AlgebraType(tag, rank) for tag in LieType for rank in range(1, 9)
            if rank >= {'A': 1, 'B': 2, 'C': 2, 'D': 4}[tag.value]]


def weight(tag, *coeffs):
    return DominantWeight(AlgebraType(tag, len(coeffs)), coeffs)


class TestTypes:
    def test_string_tag(self):
        assert AlgebraType('C', 3) == AlgebraType(LieType.C, 3)
        assert str(AlgebraType('B', 3)) == 'B3'

    @pytest.mark.parametrize('tag, rank', [('A', 0), ('B', 1), ('C', 1), ('D', 3)])
    def test_low_ranks_are_rejected(self, tag, rank):
        with pytest.raises(DomainError):
            AlgebraType(tag, rank)

    def test_weight_length_and_sign(self):
        with pytest.raises(DomainError):
            DominantWeight(AlgebraType('B', 3), (1, 0))
        with pytest.raises(DomainError):
            DominantWeight(AlgebraType('B', 3), (1, -1, 0))

    def test_weight_arithmetic(self):
        algebra = AlgebraType('D', 4)
        w = DominantWeight.fundamental(algebra, 3) + DominantWeight.fundamental(algebra, 4)
        assert w.coeffs == (0, 0, 1, 1)
        assert w.dominates(DominantWeight.fundamental(algebra, 4))
        assert not DominantWeight.fundamental(algebra, 4).dominates(w)
        assert DominantWeight.zero(algebra).is_zero
        assert str(w) == 'D4(0,0,1,1)'

    def test_root_counts(self):
        for l in range(2, 7):
            assert len(positive_roots(AlgebraType('A', l))) == l * (l + 1) // 2
            assert len(positive_roots(AlgebraType('B', l))) == l * l
            assert len(positive_roots(AlgebraType('C', l))) == l * l
        assert len(positive_roots(AlgebraType('D', 5))) == 20

    def test_doubled_coordinates(self):
        assert delta_vector(AlgebraType('D', 4)).doubled == (6, 4, 2, 0)
        assert weight_to_epsilon(weight(LieType.D, 0, 0, 0, 2)).doubled == (8, 6, 4, 2)
        assert delta_vector(AlgebraType('B', 2)).g[-1] * 2 == 1


class TestDimensions:
    @pytest.mark.parametrize('w, dim', [
        (weight(LieType.C, 0, 1, 0), 14),
        (weight(LieType.B, 0, 1, 0), 21),
        (weight(LieType.B, 0, 0, 1), 8),
        (weight(LieType.B, 0, 0, 2), 35),
        (weight(LieType.A, 0, 1, 0), 6),
        (weight(LieType.A, 1, 0, 0), 4),
        (weight(LieType.D, 0, 0, 0, 2), 35),
        (weight(LieType.D, 0, 0, 0, 1), 8),
        (weight(LieType.C, 1, 0, 0, 0), 8),
        (weight(LieType.C, 0, 1, 0, 0), 27),
        (weight(LieType.A, 0, 1, 0, 0), 10),
    ])
    def test_known_values(self, w, dim):
        assert dim_generic(w) == dim
        assert dim_specialized(w) == dim

    def test_trivial_and_defining(self):
        for algebra in ALGEBRAS:
            assert dim_generic(DominantWeight.zero(algebra)) == 1
            assert dim_generic(DominantWeight.fundamental(algebra, 1)) == defining_dimension(algebra)

    def test_double_oracle_exhaustive_low_rank(self):
        for algebra in ALGEBRAS:
            if algebra.rank > 4:
                continue
            for coeffs in product(range(4), repeat=algebra.rank):
                w = DominantWeight(algebra, coeffs)
                assert dim_generic(w) == dim_specialized(w), w

    def test_double_oracle_sampled_high_rank(self):
        rng = random.Random(20240501)
        for algebra in ALGEBRAS:
            if algebra.rank <= 4:
                continue
            for _ in range(200):
                w = DominantWeight(algebra, tuple(rng.randint(0, 3) for _ in range(algebra.rank)))
                assert dim_generic(w) == dim_specialized(w), w

    @pytest.mark.slow
    @pytest.mark.parametrize('algebra', [a for a in ALGEBRAS if a.rank > 4], ids=str)
    def test_double_oracle_exhaustive_high_rank(self, algebra):
        for coeffs in product(range(4), repeat=algebra.rank):
            w = DominantWeight(algebra, coeffs)
            assert dim_generic(w) == dim_specialized(w), w

    def test_monotone_in_each_coefficient(self):
        rng = random.Random(7)
        for algebra in ALGEBRAS[:12]:
            for _ in range(30):
                coeffs = [rng.randint(0, 2) for _ in range(algebra.rank)]
                i = rng.randrange(algebra.rank)
                bigger = list(coeffs)
                bigger[i] += 1
                assert dim_generic(DominantWeight(algebra, bigger)) > dim_generic(DominantWeight(algebra, coeffs))

    def test_adjoint(self):
        for l in range(3, 7):
            assert dim_generic(DominantWeight.fundamental(AlgebraType('B', l), 2)) == (2 * l + 1) * l
            assert dim_generic(DominantWeight.fundamental(AlgebraType('C', l), 1, 2)) == l * (2 * l + 1)
        for l in range(4, 7):
            assert dim_generic(DominantWeight.fundamental(AlgebraType('D', l), 2)) == l * (2 * l - 1)


class TestClosedForms:
    def _cases(self):
        for identifier, form in CLOSED_FORMS.items():
            for rank in range(2, 9):
                try:
                    AlgebraType(form.tag, rank)
                except DomainError:
                    continue
                index = form.index(rank)
                for j in [None] + list(range(1, index + 1)):
                    if form.valid(index, j):
                        yield identifier, rank, j

    def test_every_form_matches_both_evaluators(self):
        seen = set()
        for identifier, rank, j in self._cases():
            w = closed_form_weight(identifier, rank, j)
            expected = closed_form_dim(identifier, rank, j)
            assert dim_generic(w) == expected, (identifier, rank, j)
            assert dim_specialized(w) == expected, (identifier, rank, j)
            seen.add(identifier)
        assert seen == set(CLOSED_FORMS)

    def test_exterior_powers_of_unitary_groups(self):
        for k in range(3, 9):
            for j in range(1, k):
                assert closed_form_dim('A:wj', k - 1, j) == comb(k, j)

    def test_mixed_second_power_at_five(self):
        assert closed_form_dim('A:w2+wk-2', 4) == 75
        assert dim_generic(weight(LieType.A, 0, 1, 1, 0)) == 75

    def test_rejects_unknown_and_invalid(self):
        with pytest.raises(DomainError):
            closed_form_dim('E:w1', 6)
        with pytest.raises(DomainError):
            closed_form_dim('B:wj', 3, 3)
        with pytest.raises(DomainError):
            closed_form_dim('A:w2+wk-2', 3)


def test_generic_evaluator_has_no_alias():
    from gstructure import weyl
    assert not hasattr(weyl, 'dimension')
