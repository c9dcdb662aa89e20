"""
p-adic valuations, Hurwitz-Radon numbers, complex and quaternionic James
numbers, and the gap functions j(n), j_2(n), j_4(n).

Values are kept factored: the 2-exponent of c(r) is at least 2r - 1, so the
numbers outgrow machine words quickly and are only expanded for display.
"""
from gstructure.exceptions import DomainError
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Tuple
from sympy import factorint, isprime, multiplicity, primerange
import enum
import math


@enum.unique
class SphereFamily(enum.Enum):
    REAL = 1
    COMPLEX = 2
    QUATERNIONIC = 4

    @property
    def d(self) -> int:
        return self.value


@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer stored as ascending (prime, exponent) pairs."""

    pairs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        primes = [p for p, _ in self.pairs]
        if primes != sorted(set(primes)):
            raise DomainError('primes must be distinct and ascending: %r' % (self.pairs,))
        for p, e in self.pairs:
            if e < 1 or not isprime(p):
                raise DomainError('invalid factor %d^%d' % (p, e))

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, int]) -> 'FactoredInteger':
        return cls(tuple(sorted((p, e) for p, e in exponents.items() if e > 0)))

    @classmethod
    def from_int(cls, n: int) -> 'FactoredInteger':
        if n < 1:
            raise DomainError('only positive integers can be factored, got %d' % n)
        return cls.from_exponents({int(p): int(e) for p, e in factorint(n).items()})

    @classmethod
    def power_of_two(cls, e: int) -> 'FactoredInteger':
        return cls.from_exponents({2: e})

    @property
    def factors(self) -> Dict[int, int]:
        return dict(self.pairs)

    @property
    def value(self) -> int:
        result = 1
        for p, e in self.pairs:
            result *= p ** e
        return result

    def exponent(self, p: int) -> int:
        return self.factors.get(p, 0)

    def divides(self, n: int) -> bool:
        """True when this value divides the positive integer n."""
        return all(nu_p(p, n) >= e for p, e in self.pairs)

    def decimal_digits(self) -> int:
        """Number of decimal digits of the value, without expanding it."""
        if not self.pairs:
            return 1
        log = sum(e * math.log10(p) for p, e in self.pairs)
        if log < 15:
            return len(str(self.value))
        return int(math.floor(log)) + 1

    def __mul__(self, other: 'FactoredInteger') -> 'FactoredInteger':
        merged = self.factors
        for p, e in other.pairs:
            merged[p] = merged.get(p, 0) + e
        return FactoredInteger.from_exponents(merged)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs)

    def __str__(self):
        if not self.pairs:
            return '1'
        return ' · '.join(str(p) if e == 1 else '%d^%d' % (p, e) for p, e in self.pairs)


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise DomainError('%s must be a positive integer, got %d' % (name, value))


def nu_p(p: int, n: int) -> int:
    """Largest e with p^e dividing n."""
    if not isprime(p):
        raise DomainError('%d is not prime' % p)
    if n == 0:
        raise DomainError('the valuation of 0 is infinite')
    return int(multiplicity(p, abs(n)))


HURWITZ_RADON_RESIDUES = frozenset((0, 1, 2, 4))


def hurwitz_radon_exponent(r: int) -> int:
    _require_positive('r', r)
    full, rest = divmod(r - 1, 8)
    # residues 1..rest of a partial window; each full window contributes four
    return 4 * full + sum(1 for i in range(1, rest + 1) if i % 8 in HURWITZ_RADON_RESIDUES)


def hurwitz_radon_a(r: int) -> FactoredInteger:
    return FactoredInteger.power_of_two(hurwitz_radon_exponent(r))


def _james_exponent(p: int, r: int) -> int:
    if r < p:
        return 0
    return max(i + nu_p(p, i) for i in range(1, (r - 1) // (p - 1) + 1))


def james_b(r: int) -> FactoredInteger:
    """Complex James number b(r)."""
    _require_positive('r', r)
    return FactoredInteger.from_exponents({p: _james_exponent(p, r) for p in primerange(2, r + 1)})


def quaternionic_two_exponent(r: int) -> int:
    _require_positive('r', r)
    return max([2 * r - 1] + [2 * i + nu_p(2, i) for i in range(1, r)])


def james_c(r: int) -> FactoredInteger:
    """Quaternionic James number c(r)."""
    _require_positive('r', r)
    exponents = {p: e for p, e in james_b(2 * r) if p != 2}
    exponents[2] = quaternionic_two_exponent(r)
    return FactoredInteger.from_exponents(exponents)


_T_NUMBERS = {
    SphereFamily.REAL: hurwitz_radon_a,
    SphereFamily.COMPLEX: james_b,
    SphereFamily.QUATERNIONIC: james_c,
}


def james_number(family: SphereFamily, r: int) -> FactoredInteger:
    """Order t(r) of H - F in J(P_r): a, b or c by family."""
    return _T_NUMBERS[family](r)


def two_exponent(family: SphereFamily, r: int) -> int:
    """nu_2(t(r)) without building the odd part."""
    _require_positive('r', r)
    if family is SphereFamily.REAL:
        return hurwitz_radon_exponent(r)
    if family is SphereFamily.COMPLEX:
        return _james_exponent(2, r)
    return quaternionic_two_exponent(r)


def j_real(n: int) -> int:
    _require_positive('n', n)
    beta, gamma = nu_p(2, n + 1) % 4, nu_p(2, n + 1) // 4
    return 2 ** beta + 8 * gamma


def _gap_m(n: int, family: SphereFamily) -> int:
    _require_positive('n', n)
    d = family.d
    if (n + 1) % d:
        raise DomainError('n = %d is not of the form %dm - 1' % (n, d))
    return (n + 1) // d


def least_standard_rank(n: int, family: SphereFamily) -> int:
    """
    Least k >= 1 with m = 0 mod 2^nu_2(t(m - k)), where n = dm - 1.

    a(r) is a power of two, so for the real family this is m = 0 mod
    a(m - k). When no k < m qualifies the trivial k = m is returned.
    """
    m = _gap_m(n, family)
    for k in range(1, m):
        if nu_p(2, m) >= two_exponent(family, m - k):
            return k
    return m


def j_gap(n: int, family: SphereFamily) -> int:
    """j(n), j_2(n) or j_4(n): n + 1 - d*k for the least admissible k."""
    if family is SphereFamily.REAL:
        return j_real(n)
    return n + 1 - family.d * least_standard_rank(n, family)
