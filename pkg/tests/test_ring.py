from __future__ import absolute_import
from __future__ import unicode_literals

from fractions import Fraction

from hypothesis import given, seed
from hypothesis import strategies as st
import pytest

from cauchyid.ring import (ContextMismatch, NotInvertible, PrimeFieldElem,
                           RATIONAL, Rational, RingContext, RingError,
                           ScalarParseError, UnorderedRing, cmp, is_prime,
                           parse_ring, product_of, sum_of)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
residues = st.integers(min_value=0, max_value=100)


class TestRational(object):

    def test_add(self, rational):
        """Exact fraction addition"""
        total = rational.parse("1/2") + rational.parse("1/3")
        assert str(total) == "5/6"

    def test_canonical_form(self):
        """Construction normalizes sign and common factors"""
        value = Rational(-2, 4)
        assert (value.num, value.den) == (-1, 2)
        assert str(Rational(3, -6)) == "-1/2"
        assert Rational(6, 4) == Rational(3, 2)

    def test_inv(self, rational):
        """inv(3/7) = 7/3 and inv(0) raises"""
        assert str(rational.parse("3/7").inv()) == "7/3"
        with pytest.raises(NotInvertible) as excinfo:
            rational.zero().inv()
        assert excinfo.value.value == rational.zero()

    def test_is_invertible(self, rational):
        assert not rational.zero().is_invertible()
        assert rational.parse("-5/9").is_invertible()

    def test_division(self, rational):
        assert rational.parse("1/2") / rational.parse("1/4") == 2
        assert str(1 / rational.parse("3")) == "1/3"
        with pytest.raises(NotInvertible):
            rational.one() / rational.zero()

    def test_subtraction_and_integers(self, rational):
        a = rational.parse("5/2")
        assert str(a - 1) == "3/2"
        assert str(1 - a) == "-3/2"
        assert str(2 * a) == "5"
        assert abs(rational.parse("-3/4")) == rational.parse("3/4")

    def test_cmp(self, rational):
        """Rationals are totally ordered"""
        assert cmp(rational.parse("1/3"), rational.parse("1/2")) == -1
        assert cmp(rational.element(-1), rational.element(-2)) == 1
        assert cmp(rational.parse("2/4"), rational.parse("1/2")) == 0
        assert sorted([rational.element(3), rational.parse("1/2")]) == \
            [rational.parse("1/2"), rational.element(3)]

    @seed(101)
    @given(a=fractions, b=fractions, c=fractions)
    def test_field_axioms(self, a, b, c):
        """Associativity, commutativity and distributivity hold exactly"""
        a, b, c = (RATIONAL.from_fraction(v) for v in (a, b, c))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if a.is_invertible():
            assert a * a.inv() == RATIONAL.one()

    @seed(102)
    @given(value=fractions)
    def test_parse_render(self, value):
        """Rendering and parsing again gives back the scalar"""
        a = RATIONAL.from_fraction(value)
        assert RATIONAL.parse(RATIONAL.render(a)) == a


class TestPrimeField(object):

    def test_reduction(self, f101):
        """100 + 2 = 1 in F_101"""
        assert f101.element(100) + f101.element(2) == f101.one()
        assert str(f101.element(-1)) == "100"

    def test_inv(self, f101):
        """inv(2) = 51 since 2 * 51 = 102"""
        assert str(f101.element(2).inv()) == "51"

    def test_is_invertible(self, f101):
        assert not f101.element(101).is_invertible()
        assert f101.element(7).is_invertible()
        with pytest.raises(NotInvertible):
            f101.element(202).inv()

    def test_fractions_map_through_the_inverse(self, f101, f5):
        assert f101.parse("1/2") == f101.element(51)
        with pytest.raises(NotInvertible):
            f5.parse("1/5")

    def test_integer_equality_and_hash(self, f101):
        """Equal scalars hash alike, so only the canonical residue equals an
        integer"""
        three = f101.element(3)
        assert three == 3
        assert hash(three) == hash(3)
        assert three != 104
        assert f101.element(104) == three
        assert len({three, f101.element(104), 3}) == 1

    def test_modulus_checked(self):
        with pytest.raises(RingError):
            PrimeFieldElem(3, 8)
        with pytest.raises(RingError):
            PrimeFieldElem(3, 1)
        assert PrimeFieldElem(8, 7).context == RingContext.prime(7)

    def test_unordered(self, f101):
        """Ordering a prime field is an error"""
        with pytest.raises(UnorderedRing):
            cmp(f101.element(1), f101.element(2))
        with pytest.raises(UnorderedRing):
            f101.element(1) < f101.element(2)

    @seed(103)
    @given(a=residues, b=residues, c=residues)
    def test_field_axioms(self, a, b, c):
        """Field axioms modulo 101"""
        context = RingContext.prime(101)
        a, b, c = (context.element(v) for v in (a, b, c))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == context.zero()
        if a.is_invertible():
            assert a * a.inv() == context.one()

    @seed(104)
    @given(value=residues)
    def test_parse_render(self, value):
        context = RingContext.prime(101)
        a = context.element(value)
        assert context.parse(context.render(a)) == a


class TestRingContext(object):

    def test_mismatch(self, rational, f101, f5):
        """Scalars from different rings do not mix"""
        with pytest.raises(ContextMismatch):
            rational.one() + f101.one()
        with pytest.raises(ContextMismatch):
            f5.one() * f101.one()
        with pytest.raises(ContextMismatch):
            rational.element(f101.one())
        assert rational.one() != f101.one()

    def test_element(self, rational):
        assert rational.element(Fraction(2, 6)) == rational.parse("1/3")
        assert rational.element(" 7/14 ") == rational.parse("1/2")
        for bad in (1.5, True, None, "abc", "1/0"):
            with pytest.raises(ScalarParseError):
                rational.element(bad)

    def test_prime_moduli(self):
        """Only prime moduli make fields"""
        assert RingContext.prime(101) is RingContext.prime(101)
        for modulus in (0, 1, 8, 91, "7"):
            with pytest.raises(RingError):
                RingContext.prime(modulus)
        assert [p for p in range(20) if is_prime(p)] == \
            [2, 3, 5, 7, 11, 13, 17, 19]

    def test_parse_ring(self, f101):
        assert parse_ring("rational") is RATIONAL
        assert parse_ring("prime:101") == f101
        assert parse_ring({"prime": 101}) == f101
        assert parse_ring(f101) is f101
        for bad in ("complex", "prime:x", "prime:8", {"prime": 4},
                    {"modulus": 7}, 3):
            with pytest.raises(RingError):
                parse_ring(bad)

    def test_render(self, rational, f101):
        assert str(rational) == "rational"
        assert str(f101) == "prime:101"
        assert rational.as_json() == "rational"
        assert f101.as_json() == {"prime": 101}

    def test_folds(self, rational, f101):
        """Empty sums are zero and empty products one"""
        assert sum_of(rational, []) == rational.zero()
        assert product_of(f101, []) == f101.one()
        assert str(sum_of(rational, [rational.parse("1/2")] * 3)) == "3/2"
        assert str(product_of(f101, [f101.element(10)] * 2)) == "100"
