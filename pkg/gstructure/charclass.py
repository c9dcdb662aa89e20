"""
The graded ring Z/2[t, x, y] / (t^2, x^4, y^2) with deg t = 1, deg x = 4,
deg y = 3, and the total Stiefel-Whitney class of the virtual bundle
behind the Sp(3) -> SO(15) reduction.

The ring has 16 monomials; elements are dense coefficient tuples indexed
by e_t + 2 e_x + 8 e_y.
"""
from gstructure.exceptions import DomainError, NonUnitError, VerificationError
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Mapping, Tuple
import logging

logger = logging.getLogger('gstructure.application')

T_MAX, X_MAX, Y_MAX = 1, 3, 1
SIZE = (T_MAX + 1) * (X_MAX + 1) * (Y_MAX + 1)
DEGREES = {'t': 1, 'x': 4, 'y': 3}

Monomial = Tuple[int, int, int]


def _index(et: int, ex: int, ey: int) -> int:
    return et + 2 * ex + 8 * ey


MONOMIALS = tuple(
    (et, ex, ey) for ey, ex, et in product(range(Y_MAX + 1), range(X_MAX + 1), range(T_MAX + 1))
)


def degree(monomial: Monomial) -> int:
    et, ex, ey = monomial
    return et * DEGREES['t'] + ex * DEGREES['x'] + ey * DEGREES['y']


@dataclass(frozen=True)
class TruncatedPoly:
    coefficients: Tuple[int, ...] = (0,) * SIZE

    def __post_init__(self):
        coefficients = tuple(c % 2 for c in self.coefficients)
        if len(coefficients) != SIZE:
            raise DomainError('expected %d coefficients, got %d' % (SIZE, len(coefficients)))
        object.__setattr__(self, 'coefficients', coefficients)

    @classmethod
    def from_terms(cls, terms: Mapping[Monomial, int]) -> 'TruncatedPoly':
        """Monomials beyond the truncation are dropped."""
        coefficients = [0] * SIZE
        for (et, ex, ey), c in terms.items():
            if et <= T_MAX and ex <= X_MAX and ey <= Y_MAX:
                coefficients[_index(et, ex, ey)] += c
        return cls(tuple(coefficients))

    @classmethod
    def monomial(cls, et: int = 0, ex: int = 0, ey: int = 0) -> 'TruncatedPoly':
        return cls.from_terms({(et, ex, ey): 1})

    @classmethod
    def one(cls) -> 'TruncatedPoly':
        return cls.monomial()

    @property
    def terms(self) -> Dict[Monomial, int]:
        return {m: 1 for m in MONOMIALS if self.coefficients[_index(*m)]}

    @property
    def constant(self) -> int:
        return self.coefficients[0]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.terms)

    def __bool__(self):
        return any(self.coefficients)

    def __add__(self, other: 'TruncatedPoly') -> 'TruncatedPoly':
        return TruncatedPoly(tuple(a ^ b for a, b in zip(self.coefficients, other.coefficients)))

    __sub__ = __add__

    def __mul__(self, other: 'TruncatedPoly') -> 'TruncatedPoly':
        return poly_mul(self, other)

    def __pow__(self, exponent: int) -> 'TruncatedPoly':
        base = self if exponent >= 0 else poly_inverse(self)
        result = TruncatedPoly.one()
        for _ in range(abs(exponent)):
            result = poly_mul(result, base)
        return result

    def component(self, deg: int) -> 'TruncatedPoly':
        """Homogeneous part of the given degree."""
        return TruncatedPoly.from_terms({m: 1 for m in self if degree(m) == deg})

    def __str__(self):
        if not self:
            return '0'
        parts = []
        for et, ex, ey in sorted(self, key=lambda m: (m[2], m[0], m[1])):
            text = ''
            if ex:
                text += 'x' if ex == 1 else 'x^%d' % ex
            if et:
                text += 't'
            if ey:
                text += 'y'
            parts.append(text or '1')
        return ' + '.join(parts)


def poly_mul(p: TruncatedPoly, q: TruncatedPoly) -> TruncatedPoly:
    result = [0] * SIZE
    for a in p:
        for b in q:
            et, ex, ey = a[0] + b[0], a[1] + b[1], a[2] + b[2]
            if et <= T_MAX and ex <= X_MAX and ey <= Y_MAX:
                result[_index(et, ex, ey)] ^= 1
    return TruncatedPoly(tuple(result))


def poly_inverse(p: TruncatedPoly) -> TruncatedPoly:
    """
    Inverse of a unit 1 + u: the geometric series sum of u^i stops once
    u^i vanishes, at the latest at i = 16.
    """
    if p.constant != 1:
        raise NonUnitError('%s has no inverse: its constant term is 0' % p)
    u = p + TruncatedPoly.one()
    result, power = TruncatedPoly.one(), TruncatedPoly.one()
    for _ in range(SIZE):
        power = poly_mul(power, u)
        if not power:
            break
        result = result + power
    return result


ONE = TruncatedPoly.one()
T = TruncatedPoly.monomial(et=1)
X = TruncatedPoly.monomial(ex=1)
Y = TruncatedPoly.monomial(ey=1)

# total classes of the constituent bundles
W_ETA_QUATERNION = ONE + X + T * Y
W_HOPF_QUATERNION = ONE + X
W_HOPF_HOPF = ONE
W_ETA_HOPF = ONE + T * Y

LEMMA_SP3_EXPECTED = ONE + (X + X ** 2 + X ** 3) * T * Y
TOP_DEGREE = 16


def verify_lemma_sp3() -> TruncatedPoly:
    """
    Total class of (eta - H) x_C H^3 + (H - eta) x_C H: must be
    1 + (x + x^2 + x^3)ty, with w_16 = x^3 ty nonzero.
    """
    w = (W_ETA_QUATERNION ** 3) * (W_HOPF_QUATERNION ** -3) * (W_ETA_HOPF ** -1) * W_HOPF_HOPF
    if w != LEMMA_SP3_EXPECTED:
        raise VerificationError('total class is %s, expected %s' % (w, LEMMA_SP3_EXPECTED), w)
    top = w.component(TOP_DEGREE)
    if top != X ** 3 * T * Y:
        raise VerificationError('w_16 is %s, expected x^3ty' % top, top)
    logger.debug('Total class %s, w_16 = %s.', w, top)
    return w
