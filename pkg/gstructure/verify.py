"""
Named acceptance batteries. Each returns a ``BatteryReport`` and raises
``VerificationError`` at the first disagreement.
"""
from gstructure.charclass import verify_lemma_sp3
from gstructure.classify import ReductionQuery, classify
from gstructure.enumeration import NONEXTERIOR_GROUPS, verify_min_nonexterior, verify_min_nonstandard
from gstructure.exceptions import DomainError, VerificationError
from gstructure.james import hurwitz_radon_a, j_real, nu_p
from gstructure.kocheck import fixed_generator_exists, nu2_power3_minus1
from gstructure.reality import GroupDescriptor, GroupFamily
from dataclasses import dataclass, field
from typing import Callable, Dict, List
import logging

logger = logging.getLogger('gstructure.application')

NONSTANDARD_MINIMA = (
    (GroupDescriptor(GroupFamily.SO, 7), 21),
    (GroupDescriptor(GroupFamily.SO, 8), 28),
    (GroupDescriptor(GroupFamily.SO, 9), 36),
    (GroupDescriptor(GroupFamily.SU, 5), 20),
    (GroupDescriptor(GroupFamily.SU, 6), 30),
    (GroupDescriptor(GroupFamily.Sp, 3), 14),
    (GroupDescriptor(GroupFamily.Sp, 4), 27),
)

KO_SWEEP_MAX_N = 399
CLASSIFY_SWEEP_N = (9, 199)
VALUATION_SWEEP_MAX_S = 64


@dataclass
class BatteryReport:
    name: str
    checks: int = 0
    items: List[dict] = field(default_factory=list)

    def dumps(self) -> dict:
        from gstructure.schemas import BatteryReportSchema
        return BatteryReportSchema().dump(self)


def prop51() -> BatteryReport:
    """Non-standard dimension minima by exhaustive enumeration."""
    report = BatteryReport('prop51')
    for g, expected in NONSTANDARD_MINIMA:
        result = verify_min_nonstandard(g)
        if result.bound != expected:
            raise VerificationError('%s: bound %d, expected %d' % (g, result.bound, expected), g)
        report.checks += 1
        report.items.append(result.dumps())
    return report


def prop53() -> BatteryReport:
    """Non-exterior dimension minima; SO reports which bound reading holds."""
    report = BatteryReport('prop53')
    for g in NONEXTERIOR_GROUPS:
        report.checks += 1
        report.items.append(verify_min_nonexterior(g).dumps())
    return report


def lemma_sp3() -> BatteryReport:
    w = verify_lemma_sp3()
    return BatteryReport('lemma-sp3', 1, [{'total_class': str(w), 'w16': str(w.component(16))}])


def equiv_sweep() -> BatteryReport:
    """
    For odd n: psi^3-fixed generators, a(n+1-k) | n+1 and the SO/SO
    classifier all agree with k >= n - j(n) + 1.
    """
    report = BatteryReport('equiv-sweep')
    for n in range(1, KO_SWEEP_MAX_N + 1, 2):
        threshold = n - j_real(n) + 1
        for k in range(1, n + 1):
            expected = k >= threshold
            if fixed_generator_exists(n, k) != expected:
                raise VerificationError('fixed generator disagrees with j(%d) at k=%d' % (n, k), (n, k))
            if (n + 1) % 8 == 0 and hurwitz_radon_a(n + 1 - k).divides(n + 1) != expected:
                raise VerificationError('a(%d) divisibility disagrees with j(%d)' % (n + 1 - k, n), (n, k))
            report.checks += 1
    low, high = CLASSIFY_SWEEP_N
    for n in range(low, high + 1, 2):
        threshold = n - j_real(n) + 1
        for k in range(4, n):
            verdict = classify(ReductionQuery.of('SO', n, 'SO', k))
            if verdict.reducible != (k >= threshold):
                raise VerificationError('classifier disagrees with j(%d) at k=%d' % (n, k), verdict.dumps())
            report.checks += 1
    for s in range(2, VALUATION_SWEEP_MAX_S + 1, 2):
        if nu2_power3_minus1(s) != nu_p(2, 3 ** s - 1):
            raise VerificationError('valuation identity fails at s=%d' % s, s)
        report.checks += 1
    report.items.append({'ko_max_n': KO_SWEEP_MAX_N, 'classify_n': list(CLASSIFY_SWEEP_N),
                         'valuation_max_s': VALUATION_SWEEP_MAX_S})
    return report


BATTERIES: Dict[str, Callable[[], BatteryReport]] = {
    'prop51': prop51,
    'prop53': prop53,
    'lemma-sp3': lemma_sp3,
    'equiv-sweep': equiv_sweep,
}


def run_battery(name: str) -> BatteryReport:
    try:
        battery = BATTERIES[name]
    except KeyError:
        raise DomainError('unknown battery %r, expected one of %s' % (name, ', '.join(BATTERIES))) from None
    logger.debug('Running battery %s.', name)
    report = battery()
    logger.debug('Battery %s passed %d checks.', name, report.checks)
    return report
