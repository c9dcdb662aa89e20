"""
Reality types and real dimensions of irreducible representations of
SO(k), SU(k) and Sp(k), with the dimension minima for non-standard and
non-exterior representations.

A real irreducible representation either complexifies to an irreducible
V(omega) (real type, real dimension dim V) or to V(omega) plus its
conjugate (complex or quaternionic type, real dimension 2 dim V).
"""
from gstructure.exceptions import DomainError, NotARepresentationError
from gstructure.james import SphereFamily
from gstructure.weyl import AlgebraType, DominantWeight, LieType, dim_generic
from dataclasses import dataclass
from math import comb
from typing import Optional
import enum
import logging

logger = logging.getLogger('gstructure.application')


@enum.unique
class GroupFamily(enum.Enum):
    SO = 'SO'
    SU = 'SU'
    Sp = 'Sp'

    @property
    def sphere_family(self) -> SphereFamily:
        return _SPHERE_FAMILIES[self]

    @property
    def d(self) -> int:
        return self.sphere_family.d


_SPHERE_FAMILIES = {
    GroupFamily.SO: SphereFamily.REAL,
    GroupFamily.SU: SphereFamily.COMPLEX,
    GroupFamily.Sp: SphereFamily.QUATERNIONIC,
}


@dataclass(frozen=True)
class GroupDescriptor:
    family: GroupFamily
    size: int

    def __post_init__(self):
        if not isinstance(self.family, GroupFamily):
            object.__setattr__(self, 'family', GroupFamily(self.family))
        if self.size < 1:
            raise DomainError('group size must be positive, got %d' % self.size)

    @property
    def dimension(self) -> int:
        k = self.size
        if self.family is GroupFamily.SO:
            return k * (k - 1) // 2
        if self.family is GroupFamily.SU:
            return k * k - 1
        return k * (2 * k + 1)

    @property
    def sphere_dimension(self) -> int:
        """Dimension of G_{n+1}/G_n for G_n = this group: d(n+1) - 1."""
        return self.family.d * (self.size + 1) - 1

    @property
    def algebra(self) -> AlgebraType:
        """SO(2l+1) -> B_l, SO(2l) -> D_l, SU(k) -> A_{k-1}, Sp(k) -> C_k."""
        k = self.size
        if self.family is GroupFamily.SU:
            return AlgebraType(LieType.A, k - 1)
        if self.family is GroupFamily.Sp:
            return AlgebraType(LieType.C, k)
        if k % 2:
            return AlgebraType(LieType.B, k // 2)
        return AlgebraType(LieType.D, k // 2)

    def weight(self, *coeffs: int) -> DominantWeight:
        return DominantWeight(self.algebra, coeffs)

    def __str__(self):
        return '%s(%d)' % (self.family.value, self.size)


def sphere_dimension(g: GroupDescriptor) -> int:
    return g.sphere_dimension


@enum.unique
class RealityType(enum.Enum):
    REAL = 'real'
    COMPLEX_TYPE = 'complex'
    QUATERNIONIC_TYPE = 'quaternionic'
    UNSPECIFIED_BY_PAPER = 'unspecified'


@dataclass(frozen=True)
class RealIrrepInfo:
    weight: DominantWeight
    reality: RealityType
    real_dim: int
    real_dim_is_lower_bound: bool = False

    def dumps(self) -> dict:
        from gstructure.schemas import RealIrrepInfoSchema
        return RealIrrepInfoSchema().dump(self)


def _check_weight(g: GroupDescriptor, w: DominantWeight) -> None:
    if w.algebra != g.algebra:
        raise DomainError('%s is not a weight of %s (algebra %s)' % (w, g, g.algebra))


def descends(g: GroupDescriptor, w: DominantWeight) -> bool:
    """Whether V(w) is a representation of g rather than of its spin cover."""
    _check_weight(g, w)
    m, algebra = w.coeffs, w.algebra
    if algebra.tag is LieType.B:
        return m[-1] % 2 == 0
    if algebra.tag is LieType.D:
        return (m[-2] + m[-1]) % 2 == 0
    return True


def reality_type(g: GroupDescriptor, w: DominantWeight) -> RealityType:
    if not descends(g, w):
        raise NotARepresentationError('%s is a representation of Spin(%d) only' % (w, g.size))
    m, tag = w.coeffs, w.algebra.tag
    if tag is LieType.B:
        return RealityType.REAL
    if tag is LieType.D:
        l = w.algebra.rank
        if l % 2 == 0 or m[-2] == m[-1]:
            return RealityType.REAL
        logger.warning('Reality of %s under %s is not decided; using the lower bound.', w, g)
        return RealityType.UNSPECIFIED_BY_PAPER
    if tag is LieType.C:
        odd_sum = sum(m[0::2])
        return RealityType.REAL if odd_sum % 2 == 0 else RealityType.QUATERNIONIC_TYPE
    k = g.size
    if m != m[::-1]:
        return RealityType.COMPLEX_TYPE
    if k % 4 == 2 and m[k // 2 - 1] % 2:
        return RealityType.QUATERNIONIC_TYPE
    return RealityType.REAL


def conjugate_weight(g: GroupDescriptor, w: DominantWeight) -> DominantWeight:
    """Highest weight of the dual representation."""
    _check_weight(g, w)
    m, algebra = w.coeffs, w.algebra
    if algebra.tag is LieType.A:
        return DominantWeight(algebra, m[::-1])
    if algebra.tag is LieType.D and algebra.rank % 2:
        return DominantWeight(algebra, m[:-2] + (m[-1], m[-2]))
    return w


def real_dim(g: GroupDescriptor, w: DominantWeight) -> RealIrrepInfo:
    reality = reality_type(g, w)
    complex_dim = dim_generic(w)
    if reality is RealityType.REAL:
        return RealIrrepInfo(w, reality, complex_dim)
    if reality is RealityType.UNSPECIFIED_BY_PAPER:
        return RealIrrepInfo(w, reality, complex_dim, real_dim_is_lower_bound=True)
    return RealIrrepInfo(w, reality, 2 * complex_dim)


def is_standard(g: GroupDescriptor, w: DominantWeight) -> bool:
    """omega_1, or its conjugate omega_{k-1} for SU(k)."""
    _check_weight(g, w)
    standard = DominantWeight.fundamental(w.algebra, 1)
    return w == standard or w == conjugate_weight(g, standard)


_NONSTANDARD_FLOOR = {GroupFamily.SO: 7, GroupFamily.SU: 5, GroupFamily.Sp: 3}


def min_dim_nonstandard(g: GroupDescriptor) -> int:
    """Least real dimension of a nontrivial, non-standard real irreducible representation."""
    k = g.size
    if k < _NONSTANDARD_FLOOR[g.family]:
        raise DomainError('the bound for %s needs k >= %d' % (g.family.value, _NONSTANDARD_FLOOR[g.family]))
    if g.family is GroupFamily.SO:
        return k * (k - 1) // 2
    if g.family is GroupFamily.SU:
        return k * (k - 1)
    return k * (2 * k - 1) - 1


def achieving_weight(g: GroupDescriptor) -> DominantWeight:
    """omega_2 in every family: lambda^2, its realification, or lambda^2 minus the trivial line."""
    min_dim_nonstandard(g)
    return DominantWeight.fundamental(g.algebra, 2)


def exterior_power_weights(g: GroupDescriptor, i: int):
    """Dominant weights of the irreducible constituents of the complexified lambda^i."""
    algebra = g.algebra
    l, tag = algebra.rank, algebra.tag
    if not 1 <= i <= (g.size if tag is LieType.A else l):
        raise DomainError('%s has no exterior power lambda^%d in its generating set' % (g, i))
    if tag is LieType.B and i == l:
        return (DominantWeight.fundamental(algebra, l, 2),)
    if tag is LieType.D and i == l - 1:
        return (DominantWeight.fundamental(algebra, l - 1) + DominantWeight.fundamental(algebra, l),)
    if tag is LieType.D and i == l:
        return (DominantWeight.fundamental(algebra, l - 1, 2), DominantWeight.fundamental(algebra, l, 2))
    if tag is LieType.A and i == g.size:
        return (DominantWeight.zero(algebra),)
    if tag is LieType.C:
        # lambda^i = V(omega_i) + lambda^{i-2} for the symplectic form
        weights = [DominantWeight.fundamental(algebra, j) for j in range(i, 0, -2)]
        if i % 2 == 0:
            weights.append(DominantWeight.zero(algebra))
        return tuple(weights)
    return (DominantWeight.fundamental(algebra, i),)


def min_dim_nonexterior(g: GroupDescriptor) -> Optional[int]:
    """
    The stated bound for representations that are not polynomials in
    exterior powers: (1/2) C(k/2, k/4) for SO(k), k = 0 mod 4, and
    C(k, k/2) for SU(k), k even. None when every representation is
    exterior-expressible.
    """
    k = g.size
    if g.family is GroupFamily.Sp:
        raise DomainError('every virtual representation of Sp(k) is a polynomial in exterior powers')
    if g.family is GroupFamily.SO:
        return comb(k // 2, k // 4) // 2 if k % 4 == 0 else None
    return comb(k, k // 2) if k % 2 == 0 else None


def derived_min_dim_nonexterior(g: GroupDescriptor) -> Optional[int]:
    """The bound as derived in the proof: dim V(2 omega_l) = (1/2) C(k, k/2) for SO(k)."""
    k = g.size
    if g.family is GroupFamily.Sp:
        raise DomainError('every virtual representation of Sp(k) is a polynomial in exterior powers')
    if g.family is GroupFamily.SO:
        return comb(k, k // 2) // 2 if k % 4 == 0 else None
    return comb(k, k // 2) if k % 2 == 0 else None


@dataclass(frozen=True)
class ExpressibilityCertificate:
    """
    Outcome of the sufficient condition for failure of exterior
    expressibility. ``expressible`` is only a claim that the failure
    pattern did not fire, not a proof of expressibility.
    """

    expressible: bool
    branch: str
    k: int
    coefficient: Optional[int] = None
    # the proof's sharper hypothesis k = 0 mod 4 (SU) holds as well
    proof_condition: bool = False


def is_form_43(g: GroupDescriptor, w: DominantWeight) -> ExpressibilityCertificate:
    """
    Whether V(w) can come from a polynomial q(lambda^i, conj lambda^i)
    symmetric under swapping the two sets of variables.

    Fails when k is even and m_{k/2} >= 1.
    """
    if g.family is not GroupFamily.SU:
        raise DomainError('conjugation-symmetric polynomials are defined for SU(k) only, got %s' % g)
    _check_weight(g, w)
    k = g.size
    if k % 2:
        return ExpressibilityCertificate(True, 'k-odd', k)
    middle = w.coeffs[k // 2 - 1]
    if middle >= 1:
        return ExpressibilityCertificate(False, 'middle-exterior-power', k, middle, k % 4 == 0)
    return ExpressibilityCertificate(True, 'no-middle-exterior-power', k, middle)


def is_exterior_polynomial(g: GroupDescriptor, w: DominantWeight) -> ExpressibilityCertificate:
    """
    SO(k) counterpart of ``is_form_43``: a failure candidate needs
    k = 0 mod 4 and m_{l-1} >= 2 or m_l >= 2.
    """
    if g.family is not GroupFamily.SO:
        raise DomainError('exterior polynomials are checked for SO(k) only, got %s' % g)
    if not descends(g, w):
        raise NotARepresentationError('%s is a representation of Spin(%d) only' % (w, g.size))
    k = g.size
    if k % 4:
        return ExpressibilityCertificate(True, 'k-not-divisible-by-4', k)
    top = max(w.coeffs[-2], w.coeffs[-1])
    if top >= 2:
        return ExpressibilityCertificate(False, 'half-spin-square', k, top, True)
    return ExpressibilityCertificate(True, 'no-half-spin-square', k, top)
