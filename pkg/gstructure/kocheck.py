"""
2-local connective KO groups of stunted real projective spectra in the
three residue branches of n + 1, the psi^3 action, and the criterion for
a psi^3-fixed generator.

Divisibility of 3^s - 1 by powers of two goes through the valuation
identity nu_2(3^s - 1) = nu_2(s) + 2 (s even); the power itself is never
formed.
"""
from gstructure.exceptions import DomainError
from gstructure.james import hurwitz_radon_a, hurwitz_radon_exponent, nu_p
from dataclasses import dataclass
from typing import Optional
import enum
import logging

logger = logging.getLogger('gstructure.application')


@enum.unique
class KOStatus(enum.Enum):
    CYCLIC = 'cyclic'
    ZERO_PROJECTION = 'zero-projection'
    NOT_COMPUTED = 'not-computed-by-paper'


@dataclass(frozen=True)
class KOGroupInfo:
    """
    ``order`` is 0 for the zero-projection branch and None when the
    group is not computed. ``psi3_exponent`` is e in 3^e; the multiplier
    is only expanded on request.
    """

    n: int
    k: int
    status: KOStatus
    order: Optional[int] = None
    psi3_exponent: Optional[int] = None

    @property
    def psi3_multiplier(self) -> Optional[int]:
        if self.psi3_exponent is None:
            return None
        return 3 ** self.psi3_exponent

    @property
    def branch(self) -> int:
        """n + 1 mod 8."""
        return (self.n + 1) % 8

    def dumps(self) -> dict:
        from gstructure.schemas import KOGroupInfoSchema
        return KOGroupInfoSchema().dump(self)


def _check(n: int, k: int) -> None:
    if n < 1 or n % 2 == 0:
        raise DomainError('n must be a positive odd integer, got %d' % n)
    if not 1 <= k <= n:
        raise DomainError('k must lie in 1..%d, got %d' % (n, k))


def ko_group(n: int, k: int) -> KOGroupInfo:
    _check(n, k)
    if (n + 1) % 8 == 0:
        order = 2 * hurwitz_radon_a(n + 1 - k).value
        return KOGroupInfo(n, k, KOStatus.CYCLIC, order, (n + 1) // 2)
    if (n + 1) % 8 == 4 and k == n - 4:
        return KOGroupInfo(n, k, KOStatus.CYCLIC, 16)
    if (n + 1) % 4 == 2 and k == n - 2:
        return KOGroupInfo(n, k, KOStatus.ZERO_PROJECTION, 0)
    logger.debug('KO group for n=%d, k=%d lies outside the computed branches.', n, k)
    return KOGroupInfo(n, k, KOStatus.NOT_COMPUTED)


def nu2_power3_minus1(s: int) -> int:
    """nu_2(3^s - 1) for even s > 0."""
    if s < 1 or s % 2:
        raise DomainError('s must be a positive even integer, got %d' % s)
    return nu_p(2, s) + 2


def fixed_generator_exists(n: int, k: int) -> bool:
    """
    Whether the generator of the stunted KO group can be fixed by psi^3,
    i.e. whether the sphere bundle admits the reduction to SO(k).
    """
    _check(n, k)
    if (n + 1) % 8 == 0:
        # 2a(n+1-k) | 3^{(n+1)/2} - 1
        return 1 + hurwitz_radon_exponent(n + 1 - k) <= nu2_power3_minus1((n + 1) // 2)
    if (n + 1) % 8 == 4:
        return k > n - 4
    return k > n - 2
