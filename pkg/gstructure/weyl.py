"""
Classical root systems A_{k-1}, B_l, C_k, D_l and the Weyl Dimension Formula.

Dimensions are computed twice: ``dim_generic`` runs the product over
positive roots with integer inner products, ``dim_specialized`` evaluates
the family-specific product over the coordinates g_i of omega + delta.
Each is the other's oracle.

Coordinates in the epsilon basis are stored doubled, so the half-integer
spinor weights of B_l and D_l stay integral.
"""
from gstructure.cache import table_cache
from gstructure.exceptions import DomainError, WeylIntegralityError
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Dict, Optional, Tuple
import enum
import logging

logger = logging.getLogger('gstructure.application')


@enum.unique
class LieType(enum.Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'


# Smaller ranks coincide with other families (B_1 = C_1 = A_1, D_3 = A_3)
# and are rejected rather than aliased.
MIN_RANK = {LieType.A: 1, LieType.B: 2, LieType.C: 2, LieType.D: 4}


@dataclass(frozen=True)
class AlgebraType:
    tag: LieType
    rank: int

    def __post_init__(self):
        if not isinstance(self.tag, LieType):
            object.__setattr__(self, 'tag', LieType(self.tag))
        if self.rank < MIN_RANK[self.tag]:
            raise DomainError('%s requires rank >= %d, got %d'
                              % (self.tag.value, MIN_RANK[self.tag], self.rank))

    @property
    def coordinates(self) -> int:
        """Length of epsilon vectors: A_{k-1} lives in k coordinates."""
        return self.rank + 1 if self.tag is LieType.A else self.rank

    def __str__(self):
        return '%s%d' % (self.tag.value, self.rank)


@dataclass(frozen=True)
class DominantWeight:
    algebra: AlgebraType
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(int(m) for m in self.coeffs))
        if len(self.coeffs) != self.algebra.rank:
            raise DomainError('%s needs %d coefficients, got %d'
                              % (self.algebra, self.algebra.rank, len(self.coeffs)))
        if any(m < 0 for m in self.coeffs):
            raise DomainError('dominant weights have nonnegative coefficients: %r' % (self.coeffs,))

    @classmethod
    def zero(cls, algebra: AlgebraType) -> 'DominantWeight':
        return cls(algebra, (0,) * algebra.rank)

    @classmethod
    def fundamental(cls, algebra: AlgebraType, i: int, multiple: int = 1) -> 'DominantWeight':
        """multiple * omega_i, with i counted from 1."""
        if not 1 <= i <= algebra.rank:
            raise DomainError('%s has no fundamental weight omega_%d' % (algebra, i))
        coeffs = [0] * algebra.rank
        coeffs[i - 1] = multiple
        return cls(algebra, tuple(coeffs))

    def __add__(self, other: 'DominantWeight') -> 'DominantWeight':
        if other.algebra != self.algebra:
            raise DomainError('cannot add weights of %s and %s' % (self.algebra, other.algebra))
        return DominantWeight(self.algebra, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def dominates(self, other: 'DominantWeight') -> bool:
        """Coefficient-wise self >= other."""
        return self.algebra == other.algebra and all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self):
        return '%s(%s)' % (self.algebra, ','.join(map(str, self.coeffs)))


@dataclass(frozen=True)
class EpsilonVector:
    """Entry i is 2*g_i."""

    doubled: Tuple[int, ...]

    @property
    def g(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)


@table_cache
def fundamental_weights(algebra: AlgebraType) -> Tuple[Tuple[int, ...], ...]:
    """Doubled epsilon coordinates of omega_1 .. omega_l."""
    n, l = algebra.coordinates, algebra.rank
    weights = []
    for i in range(1, l + 1):
        if algebra.tag is LieType.B and i == l:
            w = [1] * n
        elif algebra.tag is LieType.D and i == l - 1:
            w = [1] * (n - 1) + [-1]
        elif algebra.tag is LieType.D and i == l:
            w = [1] * n
        else:
            w = [2] * i + [0] * (n - i)
        weights.append(tuple(w))
    return tuple(weights)


@table_cache
def positive_roots(algebra: AlgebraType) -> Tuple[Tuple[int, ...], ...]:
    n = algebra.coordinates

    def unit(*entries):
        v = [0] * n
        for index, coefficient in entries:
            v[index] += coefficient
        return tuple(v)

    roots = []
    for i in range(n):
        for j in range(i + 1, n):
            roots.append(unit((i, 1), (j, -1)))
            if algebra.tag is not LieType.A:
                roots.append(unit((i, 1), (j, 1)))
        if algebra.tag is LieType.B:
            roots.append(unit((i, 1)))
        elif algebra.tag is LieType.C:
            roots.append(unit((i, 2)))
    logger.debug('Built %d positive roots for %s.', len(roots), algebra)
    return tuple(roots)


def _combine(algebra: AlgebraType, coeffs) -> Tuple[int, ...]:
    total = [0] * algebra.coordinates
    for m, omega in zip(coeffs, fundamental_weights(algebra)):
        if m:
            for index, x in enumerate(omega):
                total[index] += m * x
    return tuple(total)


@table_cache
def delta_vector(algebra: AlgebraType) -> EpsilonVector:
    """delta = sum of the fundamental weights."""
    return EpsilonVector(_combine(algebra, (1,) * algebra.rank))


def weight_to_epsilon(w: DominantWeight) -> EpsilonVector:
    """Epsilon coordinates of omega + delta."""
    shifted = [m + 1 for m in w.coeffs]
    return EpsilonVector(_combine(w.algebra, shifted))


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def dim_generic(w: DominantWeight) -> int:
    """Product over positive roots of <beta, omega + delta> / <beta, delta>."""
    shifted = weight_to_epsilon(w).doubled
    delta = delta_vector(w.algebra).doubled
    numerator = denominator = 1
    for beta in positive_roots(w.algebra):
        numerator *= _dot(beta, shifted)
        denominator *= _dot(beta, delta)
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise WeylIntegralityError('Weyl quotient %d/%d is not integral' % (numerator, denominator), w)
    return quotient


def _specialized_a(g, k):
    result = Fraction(1)
    for i in range(1, k):
        for j in range(i + 1, k):
            result *= Fraction(g[i - 1] - g[j - 1], j - i)
        result *= Fraction(g[i - 1], k - i)
    return result


def _specialized_b(g, l):
    result = Fraction(1)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            result *= Fraction((g[i - 1] - g[j - 1]) * (g[i - 1] + g[j - 1]),
                               (j - i) * (2 * l + 1 - i - j))
        result *= Fraction(2 * g[i - 1], 2 * l - 2 * i + 1)
    return result


def _specialized_c(g, k):
    result = Fraction(1)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            result *= Fraction((g[i - 1] - g[j - 1]) * (g[i - 1] + g[j - 1]),
                               (j - i) * (2 * k + 2 - i - j))
        result *= Fraction(g[i - 1], k - i + 1)
    return result


def _specialized_d(g, l):
    result = Fraction(1)
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            result *= Fraction((g[i - 1] - g[j - 1]) * (g[i - 1] + g[j - 1]),
                               (j - i) * (2 * l - i - j))
    return result


_SPECIALIZED = {
    LieType.A: lambda g, algebra: _specialized_a(g, algebra.rank + 1),
    LieType.B: lambda g, algebra: _specialized_b(g, algebra.rank),
    LieType.C: lambda g, algebra: _specialized_c(g, algebra.rank),
    LieType.D: lambda g, algebra: _specialized_d(g, algebra.rank),
}


def dim_specialized(w: DominantWeight) -> int:
    """The closed product over g_i for the weight's family."""
    value = _SPECIALIZED[w.algebra.tag](weight_to_epsilon(w).g, w.algebra)
    if value.denominator != 1:
        raise WeylIntegralityError('specialized product %s is not integral' % value, w)
    return value.numerator


def defining_dimension(algebra: AlgebraType) -> int:
    return {
        LieType.A: algebra.rank + 1,
        LieType.B: 2 * algebra.rank + 1,
        LieType.C: 2 * algebra.rank,
        LieType.D: 2 * algebra.rank,
    }[algebra.tag]


@dataclass(frozen=True)
class ClosedForm:
    """
    A tabulated dimension value together with the weight it belongs to.

    ``index`` is the family parameter: k for A_{k-1} and C_k, l for
    B_l and D_l. ``j`` is only used by the omega_j families.
    """

    identifier: str
    tag: LieType
    value: Callable[[int, Optional[int]], int]
    coeffs: Callable[[int, Optional[int]], Dict[int, int]]
    valid: Callable[[int, Optional[int]], bool]

    def index(self, rank: int) -> int:
        return rank + 1 if self.tag is LieType.A else rank


def _form(identifier, tag, value, coeffs, valid=lambda i, j: j is None):
    return identifier, ClosedForm(identifier, tag, value, coeffs, valid)


CLOSED_FORMS = dict([
    _form('A:wj', LieType.A, lambda k, j: comb(k, j),
          lambda k, j: {j: 1}, lambda k, j: j is not None and 1 <= j <= k - 1),
    _form('A:2w1', LieType.A, lambda k, j: k * (k + 1) // 2, lambda k, j: {1: 2}),
    _form('A:w1+wk-1', LieType.A, lambda k, j: k * k - 1,
          lambda k, j: {1: 1, k - 1: 1}, lambda k, j: j is None and k >= 3),
    # dim(lambda^2 x conj lambda^2) - dim(adjoint) - 1; the shorter k^2(k+1)/4
    # is not an integer at k = 5
    _form('A:w2+wk-2', LieType.A, lambda k, j: k * k * (k + 1) * (k - 3) // 4,
          lambda k, j: {2: 1, k - 2: 1}, lambda k, j: j is None and k >= 5),
    _form('B:wj', LieType.B, lambda l, j: comb(2 * l + 1, j),
          lambda l, j: {j: 1}, lambda l, j: j is not None and 1 <= j <= l - 1),
    _form('B:2wl', LieType.B, lambda l, j: comb(2 * l + 1, l), lambda l, j: {l: 2}),
    _form('B:2w1', LieType.B, lambda l, j: (2 * l + 3) * l, lambda l, j: {1: 2}),
    _form('C:wj', LieType.C, lambda k, j: comb(2 * k + 1, j) * (2 * k - 2 * j + 2) // (2 * k - j + 2),
          lambda k, j: {j: 1}, lambda k, j: j is not None and 1 <= j <= k),
    _form('C:2w1', LieType.C, lambda k, j: (2 * k + 1) * k, lambda k, j: {1: 2}),
    _form('D:wj', LieType.D, lambda l, j: comb(2 * l, j),
          lambda l, j: {j: 1}, lambda l, j: j is not None and 1 <= j <= l - 2),
    _form('D:wl-1+wl', LieType.D, lambda l, j: comb(2 * l, l - 1), lambda l, j: {l - 1: 1, l: 1}),
    _form('D:2wl-1', LieType.D, lambda l, j: comb(2 * l, l) // 2, lambda l, j: {l - 1: 2}),
    _form('D:2wl', LieType.D, lambda l, j: comb(2 * l, l) // 2, lambda l, j: {l: 2}),
    _form('D:2w1', LieType.D, lambda l, j: (2 * l - 1) * (l + 1), lambda l, j: {1: 2}),
])


def _closed_form(identifier: str, rank: int, j: Optional[int]) -> Tuple[ClosedForm, int]:
    try:
        form = CLOSED_FORMS[identifier]
    except KeyError:
        raise DomainError('unknown closed form %r' % identifier) from None
    AlgebraType(form.tag, rank)
    index = form.index(rank)
    if not form.valid(index, j):
        raise DomainError('closed form %s does not apply to rank %d, j=%r' % (identifier, rank, j))
    return form, index


def closed_form_dim(identifier: str, rank: int, j: Optional[int] = None) -> int:
    form, index = _closed_form(identifier, rank, j)
    return form.value(index, j)


def closed_form_weight(identifier: str, rank: int, j: Optional[int] = None) -> DominantWeight:
    form, index = _closed_form(identifier, rank, j)
    algebra = AlgebraType(form.tag, rank)
    coeffs = [0] * rank
    for i, m in form.coeffs(index, j).items():
        coeffs[i - 1] += m
    return DominantWeight(algebra, tuple(coeffs))
