"""
Exhaustive enumeration of dominant weights below a dimension bound.

The Weyl dimension is monotone in every coefficient, so a depth-first
search over coefficient increments can drop a whole subtree as soon as
its root exceeds the bound. Each coefficient vector is generated once:
from a node reached by incrementing index i only indices <= i are
incremented again.
"""
from gstructure.conf import settings
from gstructure.exceptions import DomainError, EnumerationOverflowError, VerificationError
from gstructure.reality import (
    GroupDescriptor, GroupFamily, RealIrrepInfo, achieving_weight, conjugate_weight,
    derived_min_dim_nonexterior, is_exterior_polynomial, is_form_43, is_standard,
    min_dim_nonexterior, min_dim_nonstandard, real_dim,
)
from gstructure.weyl import AlgebraType, DominantWeight, LieType, dim_generic
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
import logging

logger = logging.getLogger('gstructure.application')

WeightRow = Tuple[DominantWeight, int]

_FILTER_ALGEBRAS = {
    GroupFamily.SO: (LieType.B, LieType.D),
    GroupFamily.SU: (LieType.A,),
    GroupFamily.Sp: (LieType.C,),
}


@dataclass(frozen=True)
class EnumerationRequest:
    algebra: AlgebraType
    max_complex_dim: int
    descend_filter: Optional[GroupFamily] = None

    def __post_init__(self):
        if self.max_complex_dim < 0:
            raise DomainError('dimension bound must be nonnegative, got %d' % self.max_complex_dim)
        if self.descend_filter is not None:
            if not isinstance(self.descend_filter, GroupFamily):
                object.__setattr__(self, 'descend_filter', GroupFamily(self.descend_filter))
            if self.algebra.tag not in _FILTER_ALGEBRAS[self.descend_filter]:
                raise DomainError('%s weights cannot be filtered by %s descent'
                                  % (self.algebra, self.descend_filter.value))

    def accepts(self, w: DominantWeight) -> bool:
        """Group-descent parity: spin weights never descend to SO."""
        if self.descend_filter is not GroupFamily.SO:
            return True
        m = w.coeffs
        if self.algebra.tag is LieType.B:
            return m[-1] % 2 == 0
        return (m[-2] + m[-1]) % 2 == 0


def enumerate_weights(req: EnumerationRequest, cap: Optional[int] = None) -> List[WeightRow]:
    """
    All dominant weights with complex dimension <= the bound that pass
    the descent filter, sorted by (dimension, coefficients).

    Raises EnumerationOverflowError when more than ``cap`` weights lie
    within the bound, whatever the filter keeps.
    """
    cap = settings.ENUMERATION_SAFETY_CAP if cap is None else cap
    bound, algebra = req.max_complex_dim, req.algebra
    if bound < 1:
        return []
    rank = algebra.rank
    rows = []
    within = pruned = 0
    stack = [((0,) * rank, rank)]
    while stack:
        coeffs, last = stack.pop()
        w = DominantWeight(algebra, coeffs)
        dim = dim_generic(w)
        if dim > bound:
            pruned += 1
            continue
        within += 1
        if within > cap:
            raise EnumerationOverflowError(cap)
        if req.accepts(w):
            rows.append((w, dim))
        # pushed low index first so higher indices are explored first
        for i in range(1, last + 1):
            child = list(coeffs)
            child[i - 1] += 1
            stack.append((tuple(child), i))
    rows.sort(key=lambda row: (row[1], row[0].coeffs))
    logger.debug('Enumerated %s up to %d: %d within bound, %d pruned, %d kept.',
                 algebra, bound, within, pruned, len(rows))
    return rows


def _require_desk_scale(g: GroupDescriptor) -> None:
    limit = settings.DESK_SCALE_MAX_RANK
    if g.algebra.rank > limit:
        raise DomainError('%s has rank %d, above the verification limit %d' % (g, g.algebra.rank, limit))


def _real_irreps(g: GroupDescriptor, bound: int) -> List[RealIrrepInfo]:
    """Nontrivial real irreducibles with dim_C <= bound, one per conjugate pair."""
    rows = enumerate_weights(EnumerationRequest(g.algebra, bound, g.family))
    result = []
    for w, _ in rows:
        if w.is_zero:
            continue
        conjugate = conjugate_weight(g, w)
        if conjugate.coeffs > w.coeffs:
            continue
        result.append(real_dim(g, w))
    return result


@dataclass
class NonstandardReport:
    group: GroupDescriptor
    bound: int
    achieving_weight: DominantWeight
    minimum: int
    witnesses: List[RealIrrepInfo] = field(default_factory=list)
    below_bound: List[RealIrrepInfo] = field(default_factory=list)

    def dumps(self) -> dict:
        from gstructure.schemas import NonstandardReportSchema
        return NonstandardReportSchema().dump(self)


def verify_min_nonstandard(g: GroupDescriptor) -> NonstandardReport:
    """
    Check by enumeration that every nontrivial real irreducible of real
    dimension below ``min_dim_nonstandard(g)`` is the standard one and
    that the bound is attained at ``achieving_weight(g)``.
    """
    bound = min_dim_nonstandard(g)
    _require_desk_scale(g)
    expected = achieving_weight(g)
    irreps = _real_irreps(g, bound)
    below, nonstandard = [], []
    for info in irreps:
        if info.real_dim < bound:
            if info.real_dim_is_lower_bound:
                raise VerificationError('reality of a below-bound weight of %s is undecided' % g, info.weight)
            if not is_standard(g, info.weight):
                raise VerificationError('%s has a non-standard irreducible of real dimension %d < %d'
                                        % (g, info.real_dim, bound), info.weight)
            below.append(info)
        elif not is_standard(g, info.weight):
            nonstandard.append(info)
    if not nonstandard:
        raise VerificationError('no non-standard irreducible of %s within dimension %d' % (g, bound))
    minimum = min(info.real_dim for info in nonstandard)
    witnesses = [info for info in nonstandard if info.real_dim == minimum]
    if minimum != bound:
        raise VerificationError('%s: minimum %d differs from bound %d' % (g, minimum, bound), witnesses[0].weight)
    if expected not in [info.weight for info in witnesses]:
        raise VerificationError('%s: bound %d not attained at the expected weight' % (g, bound), expected)
    logger.debug('%s: non-standard minimum %d attained by %s.', g, minimum,
                 ', '.join(str(info.weight) for info in witnesses))
    return NonstandardReport(g, bound, expected, minimum, witnesses, below)


NONEXTERIOR_GROUPS = (
    GroupDescriptor(GroupFamily.SO, 8),
    GroupDescriptor(GroupFamily.SO, 12),
    GroupDescriptor(GroupFamily.SU, 4),
    GroupDescriptor(GroupFamily.SU, 6),
    GroupDescriptor(GroupFamily.SU, 8),
)


@dataclass
class NonexteriorReport:
    """
    ``reading`` names which closed form matched the enumerated minimum:
    ``statement``, ``proof`` or ``both``.
    """

    group: GroupDescriptor
    stated_bound: int
    derived_bound: int
    minimum: int
    reading: str
    witnesses: List[DominantWeight] = field(default_factory=list)

    def dumps(self) -> dict:
        from gstructure.schemas import NonexteriorReportSchema
        return NonexteriorReportSchema().dump(self)


def _fails_exterior(g: GroupDescriptor, w: DominantWeight) -> bool:
    if g.family is GroupFamily.SU:
        return not is_form_43(g, w).expressible
    return not is_exterior_polynomial(g, w).expressible


def verify_min_nonexterior(g: GroupDescriptor) -> NonexteriorReport:
    """
    Enumerate the weights caught by the non-expressibility condition and
    compare their least complex dimension with both readings of the bound.
    """
    if g not in NONEXTERIOR_GROUPS:
        raise DomainError('non-exterior minima are verified for %s only'
                          % ', '.join(map(str, NONEXTERIOR_GROUPS)))
    stated, derived = min_dim_nonexterior(g), derived_min_dim_nonexterior(g)
    rows = enumerate_weights(EnumerationRequest(g.algebra, max(stated, derived), g.family))
    failing = [(w, dim) for w, dim in rows if _fails_exterior(g, w)]
    if not failing:
        raise VerificationError('%s: no non-expressible weight within dimension %d' % (g, max(stated, derived)))
    minimum = failing[0][1]
    witnesses = [w for w, dim in failing if dim == minimum]
    if minimum == stated == derived:
        reading = 'both'
    elif minimum == stated:
        reading = 'statement'
    elif minimum == derived:
        reading = 'proof'
    else:
        raise VerificationError('%s: minimum %d matches neither %d nor %d' % (g, minimum, stated, derived),
                                witnesses[0])
    logger.debug('%s: non-exterior minimum %d (%s reading).', g, minimum, reading)
    return NonexteriorReport(g, stated, derived, minimum, reading, witnesses)
