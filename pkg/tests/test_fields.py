from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tightclosure.fields import GF, QQ, PrimeField, field_from_descriptor, is_prime

PRIMES = [2, 3, 5, 7, 13, 101, 2**31 - 1]


def test_is_prime_against_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))
    assert [n for n in range(500) if is_prime(n)] == [n for n in range(500) if slow(n)]
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


@pytest.mark.parametrize("n", [0, 1, 4, 9, 561, 1 << 20])
def test_prime_field_rejects_composites(n):
    with pytest.raises(ValueError):
        PrimeField(n)


def test_rationals_are_reduced():
    v = QQ.convert(Fraction(6, -4))
    assert (v.numerator, v.denominator) == (-3, 2)
    with pytest.raises(ZeroDivisionError):
        QQ.inv(QQ.zero)


def test_prime_residues_are_canonical():
    f = GF(7)
    assert f.convert(-1) == 6
    assert f.convert(Fraction(1, 2)) == 4
    assert f.mul(3, 5) == 1
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_descriptors_round_trip():
    assert field_from_descriptor("rationals") == QQ
    assert field_from_descriptor({"prime": 13}) == GF(13)
    assert field_from_descriptor(GF(5).descriptor()) == GF(5)


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


@settings(max_examples=1000, deadline=None)
@given(rationals, rationals, rationals)
def test_field_axioms_rationals(a, b, c):
    _axioms(QQ, QQ.convert(a), QQ.convert(b), QQ.convert(c))


@pytest.mark.parametrize("p", PRIMES)
def test_field_axioms_prime(p):
    f = GF(p)

    @settings(max_examples=1000, deadline=None)
    @given(st.integers(0, p - 1), st.integers(0, p - 1), st.integers(0, p - 1))
    def run(a, b, c):
        _axioms(f, a, b, c)

    run()


def _axioms(f, a, b, c):
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, b) == f.add(b, a) and f.mul(a, b) == f.mul(b, a)
    assert f.add(a, f.neg(a)) == f.zero
    if a != 0:
        assert f.mul(a, f.inv(a)) == f.one
        assert f.div(b, a) == f.mul(b, f.inv(a))
