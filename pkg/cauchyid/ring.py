from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals

from fractions import Fraction
import numbers


_PRIME_CONTEXTS = {}


class RingError(ValueError):
    """Base class for exact scalar arithmetic errors"""


class NotInvertible(RingError):
    """Raised when a scalar without an inverse is divided by"""

    def __init__(self, value, message=None):
        self.value = value
        super(NotInvertible, self).__init__(
            message or "{} is not invertible".format(value))


class ContextMismatch(RingError):
    """Raised when scalars from different rings meet in one operation"""


class UnorderedRing(RingError):
    """Raised when an ordering is requested in a ring without one"""


class ScalarParseError(RingError):
    """Raised when text cannot be read as a scalar"""


def is_prime(p):
    """Trial division primality test, adequate for printable moduli"""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class RingContext(object):
    """The ring every scalar of one computation lives in: either the
    rationals or the prime field of a fixed modulus"""

    RATIONAL = 'rational'
    PRIME = 'prime'

    def __init__(self, kind, modulus=None):
        if kind == self.RATIONAL:
            if modulus is not None:
                raise RingError("The rationals take no modulus")
        elif kind == self.PRIME:
            if not isinstance(modulus, numbers.Integral) or not is_prime(modulus):
                raise RingError("Prime field modulus must be a prime, got {!r}"
                                .format(modulus))
            modulus = int(modulus)
        else:
            raise RingError("Unknown ring kind {!r}".format(kind))
        self.kind = kind
        self.modulus = modulus

    @classmethod
    def prime(cls, p):
        try:
            return _PRIME_CONTEXTS[p]
        except (KeyError, TypeError):
            pass
        context = cls(cls.PRIME, p)
        _PRIME_CONTEXTS[context.modulus] = context
        return context

    @property
    def is_ordered(self):
        return self.kind == self.RATIONAL

    def __eq__(self, other):
        if not isinstance(other, RingContext):
            return NotImplemented
        return (self.kind, self.modulus) == (other.kind, other.modulus)

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return "RingContext({!r}, {!r})".format(self.kind, self.modulus)

    def __str__(self):
        if self.kind == self.RATIONAL:
            return self.RATIONAL
        return "prime:{}".format(self.modulus)

    def as_json(self):
        """The form used by spec documents"""
        if self.kind == self.RATIONAL:
            return self.RATIONAL
        return {'prime': self.modulus}

    def element(self, value):
        """Converts an integer, Fraction, string or scalar of this ring into
        a scalar of this ring"""
        if isinstance(value, Scalar):
            if value.context != self:
                raise ContextMismatch("{!r} does not belong to {}"
                                      .format(value, self))
            return value
        if isinstance(value, bool):
            raise ScalarParseError("Booleans are not scalars")
        if isinstance(value, (numbers.Integral, Fraction)):
            return self.from_fraction(Fraction(value))
        if isinstance(value, str):
            return self.parse(value)
        raise ScalarParseError("Cannot read {!r} as an exact scalar; pass "
                               "integers or quoted fractions".format(value))

    def from_fraction(self, value):
        if self.kind == self.RATIONAL:
            return Rational._wrap(value)
        den = value.denominator % self.modulus
        if den == 0:
            raise NotInvertible(value, "Denominator of {} vanishes mod {}"
                                .format(value, self.modulus))
        return PrimeFieldElem(value.numerator * pow(den, -1, self.modulus),
                              self.modulus)

    def zero(self):
        return self.from_fraction(Fraction(0))

    def one(self):
        return self.from_fraction(Fraction(1))

    def parse(self, text):
        """Reads "a/b" or "a" (rationals) or a decimal residue (prime field;
        fractions are mapped through the field inverse)"""
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ScalarParseError("Cannot parse {!r} as a scalar".format(text))
        return self.from_fraction(value)

    def render(self, a):
        return str(self.element(a))


class Scalar(object):
    """Common contract of exact ring elements. Subclasses provide context,
    is_invertible, inv, the ring operators and equality."""

    __slots__ = ()

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * self._lift(other).inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def _lift(self, raw):
        raise NotImplementedError


class Rational(Scalar):
    """Arbitrary precision rational number, always in lowest terms with a
    positive denominator"""

    __slots__ = ('value',)

    def __init__(self, num, den=1):
        self.value = Fraction(num, den)

    @classmethod
    def _wrap(cls, value):
        obj = object.__new__(cls)
        obj.value = value
        return obj

    @property
    def context(self):
        return RATIONAL

    @property
    def num(self):
        return self.value.numerator

    @property
    def den(self):
        return self.value.denominator

    def _coerce(self, other):
        if isinstance(other, Rational):
            return other.value
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            return other
        if isinstance(other, Scalar):
            raise ContextMismatch("Cannot combine {!r} with {!r}"
                                  .format(self, other))
        return NotImplemented

    def _lift(self, raw):
        return Rational._wrap(Fraction(raw))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Rational._wrap(self.value + other)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Rational._wrap(self.value * other)

    __rmul__ = __mul__

    def __neg__(self):
        return Rational._wrap(-self.value)

    def __abs__(self):
        return Rational._wrap(abs(self.value))

    def is_invertible(self):
        return self.value != 0

    def inv(self):
        if self.value == 0:
            raise NotInvertible(self)
        return Rational._wrap(1 / self.value)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ContextMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.value == other

    def __lt__(self, other):
        return cmp(self, other) < 0

    def __le__(self, other):
        return cmp(self, other) <= 0

    def __gt__(self, other):
        return cmp(self, other) > 0

    def __ge__(self, other):
        return cmp(self, other) >= 0

    def __hash__(self):
        return hash(self.value)

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return "Rational({})".format(self.value)

    def __str__(self):
        return str(self.value)


class PrimeFieldElem(Scalar):
    """Residue modulo a prime"""

    __slots__ = ('value', 'modulus')

    def __init__(self, value, modulus):
        self.modulus = RingContext.prime(modulus).modulus
        self.value = value % self.modulus

    @property
    def context(self):
        return RingContext.prime(self.modulus)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise ContextMismatch("Moduli {} and {} differ"
                                      .format(self.modulus, other.modulus))
            return other.value
        if isinstance(other, numbers.Integral) and not isinstance(other, bool):
            return other
        if isinstance(other, Scalar):
            raise ContextMismatch("Cannot combine {!r} with {!r}"
                                  .format(self, other))
        return NotImplemented

    def _lift(self, raw):
        return PrimeFieldElem(raw, self.modulus)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.value + other, self.modulus)

    __radd__ = __add__

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElem(self.value * other, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.modulus)

    def is_invertible(self):
        return self.value != 0

    def inv(self):
        if self.value == 0:
            raise NotInvertible(self)
        return PrimeFieldElem(pow(self.value, -1, self.modulus), self.modulus)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ContextMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        # Plain integers compare by canonical residue only, matching __hash__
        return self.value == other

    def __lt__(self, other):
        return cmp(self, other) < 0

    __le__ = __gt__ = __ge__ = __lt__

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return "PrimeFieldElem({}, {})".format(self.value, self.modulus)

    def __str__(self):
        return str(self.value)


RATIONAL = RingContext(RingContext.RATIONAL)


def cmp(a, b):
    """Three-way comparison of rationals: -1, 0 or 1"""
    for value in (a, b):
        if isinstance(value, Scalar) and not value.context.is_ordered:
            raise UnorderedRing("{} is not an ordered ring"
                                .format(value.context))
    a = RATIONAL.element(a).value
    b = RATIONAL.element(b).value
    return (a > b) - (a < b)


def parse_ring(value):
    """Reads a ring selection: "rational", "prime:P" or {"prime": P}"""
    if isinstance(value, RingContext):
        return value
    if isinstance(value, dict):
        if set(value) != {'prime'}:
            raise RingError("Unknown ring description {!r}".format(value))
        return RingContext.prime(value['prime'])
    if isinstance(value, str):
        text = value.strip().lower()
        if text == RingContext.RATIONAL:
            return RATIONAL
        if text.startswith('prime:'):
            try:
                modulus = int(text.split(':', 1)[1])
            except ValueError:
                raise RingError("Bad prime modulus in {!r}".format(value))
            return RingContext.prime(modulus)
    raise RingError("Unknown ring {!r}; expected 'rational' or 'prime:P'"
                    .format(value))


def sum_of(context, values):
    total = context.zero()
    for value in values:
        total = total + value
    return total


def product_of(context, values):
    total = context.one()
    for value in values:
        total = total * value
    return total
