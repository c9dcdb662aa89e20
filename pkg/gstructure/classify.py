"""
Reductions of the structure group of G_{n+1} -> G_{n+1}/G_n to a classical
subgroup G via a homomorphism rho: G -> G_n.

Cases by (target family, source family):

    A  SO / SO   m = n + 1        m = 0 mod a(m - k)
    B  SO / SU   n = 2m - 1       m = 0 mod 2^nu_2(b(m - k))
    C  SO / Sp   n = 4m - 1       m = 0 mod 2^nu_2(c(m - k))
    D  SU / SU   m = n + 1        m = 0 mod b(m - k)
    E  SU / Sp   n = 2m - 1       m = 0 mod c(m - k)
    F  Sp / Sp   m = n + 1        m = 0 mod c(m - k)

Every other pair of families admits no reduction, and neither does an
SO or SU target with n even.
"""
from gstructure.conf import settings
from gstructure.exceptions import DomainError, OutOfDomainError, VerificationError
from gstructure.james import (
    FactoredInteger, SphereFamily, hurwitz_radon_a, j_gap, j_real, james_b, james_c, two_exponent,
)
from gstructure.reality import GroupDescriptor, GroupFamily
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, NamedTuple, Optional, Tuple
import enum
import logging

logger = logging.getLogger('gstructure.application')

SO, SU, Sp = GroupFamily.SO, GroupFamily.SU, GroupFamily.Sp

MIN_SPHERE_DIMENSION = 8
SOURCE_RANK_FLOOR = {SO: 4, SU: 2, Sp: 2}


class _Case(NamedTuple):
    label: str
    d: int
    modulus: Callable[[int], FactoredInteger]


CASES = {
    (SO, SO): _Case('A', 1, hurwitz_radon_a),
    (SO, SU): _Case('B', 2, lambda r: FactoredInteger.power_of_two(two_exponent(SphereFamily.COMPLEX, r))),
    (SO, Sp): _Case('C', 4, lambda r: FactoredInteger.power_of_two(two_exponent(SphereFamily.QUATERNIONIC, r))),
    (SU, SU): _Case('D', 1, james_b),
    (SU, Sp): _Case('E', 2, james_c),
    (Sp, Sp): _Case('F', 1, james_c),
}


@enum.unique
class HomKind(enum.Enum):
    STANDARD_INCLUSION = 'STANDARD_INCLUSION'
    SU4_SPLIT_SO15 = 'SU4_SPLIT_SO15'
    SP3_EXTERIOR_SQUARE_SO15 = 'SP3_EXTERIOR_SQUARE_SO15'


@enum.unique
class Reason(enum.Enum):
    DIVISIBLE = 'divisible'
    NOT_DIVISIBLE = 'not-divisible'
    EVEN_N = 'even-n'
    RESIDUE = 'residue'
    SOURCE_TOO_LARGE = 'source-too-large'
    FAMILY_PAIR = 'family-pair'


@dataclass(frozen=True)
class Summand:
    """An isotypic block: ``multiplicity`` copies of a ``dim``-dimensional irreducible."""

    label: str
    dim: int
    multiplicity: int = 1


@dataclass(frozen=True)
class HomDescriptor:
    kind: HomKind
    summands: Tuple[Summand, ...]

    @property
    def total_dim(self) -> int:
        return sum(s.dim * s.multiplicity for s in self.summands)

    @property
    def irreducible_count(self) -> int:
        return sum(s.multiplicity for s in self.summands)

    @property
    def is_irreducible(self) -> bool:
        return self.irreducible_count == 1


@dataclass(frozen=True)
class ReductionQuery:
    target: GroupDescriptor
    source: GroupDescriptor

    @classmethod
    def of(cls, target, n: int, source, k: int) -> 'ReductionQuery':
        return cls(GroupDescriptor(GroupFamily(target), n), GroupDescriptor(GroupFamily(source), k))

    @property
    def n(self) -> int:
        return self.target.size

    @property
    def k(self) -> int:
        return self.source.size

    def __str__(self):
        return '%s -> %s' % (self.source, self.target)


@dataclass(frozen=True)
class DivisibilityTrace:
    m: int
    d: int
    modulus: FactoredInteger
    remainder: int

    @property
    def divides(self) -> bool:
        return self.remainder == 0


@dataclass
class ReductionVerdict:
    query: ReductionQuery
    reducible: bool
    reason: Reason
    case: Optional[str] = None
    homs: List[HomDescriptor] = field(default_factory=list)
    trace: Optional[DivisibilityTrace] = None

    @property
    def m(self) -> Optional[int]:
        return self.trace.m if self.trace else None

    @property
    def d(self) -> Optional[int]:
        return self.trace.d if self.trace else None

    @property
    def modulus(self) -> Optional[FactoredInteger]:
        return self.trace.modulus if self.trace else None

    def dumps(self) -> dict:
        from gstructure.schemas import ReductionVerdictSchema
        return ReductionVerdictSchema().dump(self)


def check_target(target: GroupDescriptor) -> None:
    dim = target.sphere_dimension
    if dim < MIN_SPHERE_DIMENSION:
        raise OutOfDomainError(OutOfDomainError.SPHERE_DIMENSION,
                               'the sphere %s(%d)/%s has dimension %d < %d'
                               % (target.family.value, target.size + 1, target, dim, MIN_SPHERE_DIMENSION))


def check_hypotheses(q: ReductionQuery) -> None:
    """Raise OutOfDomainError naming the first violated hypothesis."""
    check_target(q.target)
    floor = SOURCE_RANK_FLOOR[q.source.family]
    if q.k < floor:
        raise OutOfDomainError(OutOfDomainError.SOURCE_RANK,
                               '%s sources need k >= %d, got %d' % (q.source.family.value, floor, q.k))
    if q.source.dimension >= q.target.dimension:
        raise OutOfDomainError(OutOfDomainError.GROUP_DIMENSION,
                               'dim %s = %d is not below dim %s = %d'
                               % (q.source, q.source.dimension, q.target, q.target.dimension))


def _standard_inclusion(q: ReductionQuery) -> HomDescriptor:
    """
    The source's defining representation, realified or complexified as
    the target needs, plus trivial lines up to the target size.
    """
    target, source = q.target.family, q.source.family
    # size of the source's defining module over the target's scalars
    width = q.k * source.d // target.d
    label = 'defining' if width == q.k or target is SU else 'realified defining'
    return HomDescriptor(HomKind.STANDARD_INCLUSION, (
        Summand(label, width),
        Summand('trivial', 1, q.n - width),
    ))


SU4_SPLIT = HomDescriptor(HomKind.SU4_SPLIT_SO15, (
    Summand('realified defining', 8),
    Summand('exterior square', 6),
    Summand('trivial', 1),
))

SP3_EXTERIOR_SQUARE = HomDescriptor(HomKind.SP3_EXTERIOR_SQUARE_SO15, (
    Summand('reduced exterior square', 14),
    Summand('trivial', 1),
))

EXCEPTIONAL_HOMS = {
    (SO, 15, SU, 4): SU4_SPLIT,
    (SO, 15, Sp, 3): SP3_EXTERIOR_SQUARE,
}


def _check_hom(q: ReductionQuery, hom: HomDescriptor) -> HomDescriptor:
    if hom.total_dim != q.n:
        raise VerificationError('%s: summands of %s total %d, not %d' % (q, hom.kind.value, hom.total_dim, q.n), hom)
    if hom.irreducible_count < 2:
        raise VerificationError('%s: %s is irreducible' % (q, hom.kind.value), hom)
    return hom


def _remainder(m: int, modulus: FactoredInteger) -> int:
    if modulus.decimal_digits() > len(str(m)):
        return m
    return m % modulus.value


def classify(q: ReductionQuery) -> ReductionVerdict:
    check_hypotheses(q)
    target, source = q.target.family, q.source.family
    case = CASES.get((target, source))
    if case is None:
        logger.debug('%s: no case for the family pair.', q)
        return ReductionVerdict(q, False, Reason.FAMILY_PAIR)
    if target in (SO, SU) and q.n % 2 == 0:
        return ReductionVerdict(q, False, Reason.EVEN_N, case.label)
    if (q.n + 1) % case.d:
        return ReductionVerdict(q, False, Reason.RESIDUE, case.label)
    m = (q.n + 1) // case.d
    if m - q.k < 1:
        return ReductionVerdict(q, False, Reason.SOURCE_TOO_LARGE, case.label)
    modulus = case.modulus(m - q.k)
    trace = DivisibilityTrace(m, case.d, modulus, _remainder(m, modulus))
    logger.debug('%s: case %s, m=%d, modulus %s, remainder %d.', q, case.label, m, modulus, trace.remainder)
    homs = []
    if trace.divides:
        homs.append(_check_hom(q, _standard_inclusion(q)))
    exceptional = EXCEPTIONAL_HOMS.get((target, q.n, source, q.k))
    if exceptional is not None:
        homs.append(_check_hom(q, exceptional))
    reason = Reason.DIVISIBLE if trace.divides else Reason.NOT_DIVISIBLE
    return ReductionVerdict(q, bool(homs), reason, case.label, homs, trace)


def min_source_rank(target: GroupDescriptor, source: GroupFamily) -> Optional[int]:
    """
    Least k with a reduction to the k-th source group.

    Within one family the search ends at the trivial k = n. Across
    families None means no proper reduction exists.
    """
    check_target(target)
    source = GroupFamily(source)
    k = SOURCE_RANK_FLOOR[source]
    while GroupDescriptor(source, k).dimension < target.dimension:
        if classify(ReductionQuery(target, GroupDescriptor(source, k))).reducible:
            return k
        k += 1
    if source is target.family:
        return target.size
    return None


def irreducible_reduction_exists(q: ReductionQuery) -> bool:
    """Whether some admissible rho is irreducible; never true under the hypotheses."""
    verdict = classify(q)
    for hom in verdict.homs:
        if hom.is_irreducible:
            return True
    return False


def low_dimension_forces_standard(dim_g: int, n: int, j: Optional[int] = None) -> Optional[int]:
    """
    If a Lie group of dimension ``dim_g`` < n - j reduces an SO(n)-bundle
    over a suspension, the reduction factors through the standard
    SO(n - j). Returns n - j in that case, None otherwise.

    ``j`` defaults to j(n).
    """
    if j is None:
        j = j_real(n)
    if not 1 <= j < n:
        raise DomainError('j must satisfy 1 <= j < n, got j=%d, n=%d' % (j, n))
    if dim_g < n - j:
        return n - j
    return None


@dataclass(frozen=True)
class DimensionGuard:
    group: GroupDescriptor
    n: int
    threshold: int
    holds: bool
    exception: Optional[str] = None


def nonexterior_dimension_guard(g: GroupDescriptor, n: int) -> DimensionGuard:
    """
    dim G < n - j(n) for a representation G -> SO(n) that is not a
    polynomial in exterior powers. Two SU representations escape it:
    lambda^2 of SU(4) while n <= 23 and lambda^4 of SU(8) at n = 71.
    """
    if g.family is Sp:
        raise DomainError('every Sp(k) representation is a polynomial in exterior powers')
    if g.family is SO and g.size < 5:
        raise DomainError('the guard needs SO(k) with k >= 5, got %s' % g)
    threshold = n - j_real(n)
    exception = None
    if g == GroupDescriptor(SU, 4) and n <= 23:
        exception = 'SU4-exterior-square'
    elif g == GroupDescriptor(SU, 8) and n == 71:
        exception = 'SU8-exterior-fourth'
    return DimensionGuard(g, n, threshold, g.dimension < threshold, exception)


@dataclass(frozen=True)
class AtlasRow:
    """
    ``gap`` is the sphere gap j, j_2 or j_4 of the source family at
    ``sphere_dimension``, a 2-adic quantity. For cases D, E and F the
    reduction also needs the odd part of b or c, so ``min_k`` can exceed
    ``(sphere_dimension + 1 - gap) / d``.
    """

    target: GroupDescriptor
    source: GroupFamily
    sphere_dimension: int
    case: Optional[str]
    min_k: Optional[int]
    gap: Optional[int]
    reason: str

    @property
    def n(self) -> int:
        return self.target.size

    def dumps(self) -> dict:
        from gstructure.schemas import AtlasRowSchema
        return AtlasRowSchema().dump(self)


def atlas_row(target: GroupDescriptor, source: GroupFamily) -> AtlasRow:
    source = GroupFamily(source)
    sphere = target.sphere_dimension
    case = CASES.get((target.family, source))
    label = case.label if case else None
    try:
        check_target(target)
    except OutOfDomainError as e:
        return AtlasRow(target, source, sphere, label, None, None, 'out-of-domain:%s' % e.hypothesis)
    if case is None:
        return AtlasRow(target, source, sphere, None, None, None, Reason.FAMILY_PAIR.value)
    if target.family in (SO, SU) and target.size % 2 == 0:
        return AtlasRow(target, source, sphere, label, None, None, Reason.EVEN_N.value)
    gap = None
    if (sphere + 1) % source.d == 0:
        gap = j_gap(sphere, source.sphere_family)
    min_k = min_source_rank(target, source)
    reason = 'reducible' if min_k is not None else 'irreducible'
    return AtlasRow(target, source, sphere, label, min_k, gap, reason)


def atlas_range(n_range: Iterable[int]) -> List[int]:
    ns = list(n_range)
    if len(ns) > settings.ATLAS_MAX_ROWS:
        raise DomainError('atlas of %d rows exceeds the limit %d' % (len(ns), settings.ATLAS_MAX_ROWS))
    return ns


def atlas(target: GroupFamily, source: GroupFamily, n_range: Iterable[int]) -> List[AtlasRow]:
    """One row per n: the least reducing rank of the source family, or why there is none."""
    ns = atlas_range(n_range)
    target = GroupFamily(target)
    return [atlas_row(GroupDescriptor(target, n), source) for n in ns]
