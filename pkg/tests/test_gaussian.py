import math

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from gshape.gaussian import (
    ONE_PLUS_I,
    UNITS,
    GaussianInt,
    ParseError,
    canonical,
    count_disk,
    divides,
    factor,
    format_gaussian,
    gcd,
    is_squarefree,
    norm_multiplicities,
    parse_gaussian,
    prime_ideal_norms_up_to,
    prime_ideals_up_to,
    r2_table,
)
from oracles import disk, prime_divisors

G = GaussianInt
small = st.integers(-300, 300)
gints = st.builds(G, small, small)
nonzero = gints.filter(bool)


def test_arithmetic_basics():
    a, b = G(3, 4), G(1, -2)
    assert a + b == G(4, 2)
    assert a - b == G(2, 6)
    assert a * b == G(11, -2)
    assert a.norm() == 25 and a.conj() == G(3, -4)
    assert G(0, 1) ** 2 == G(-1, 0)
    assert G(2, 1) ** 0 == G(1)


def test_64_bit_guard():
    with pytest.raises(OverflowError):
        G(2 ** 63, 0)
    with pytest.raises(OverflowError):
        G(2 ** 40, 0) * G(2 ** 40, 0)


@given(gints, nonzero)
def test_divmod_remainder_is_small(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert 2 * r.norm() <= b.norm()


def test_worked_gcd_and_factor():
    assert gcd(G(-20, 15), G(2, 1)) == G(2, 1)
    fac = factor(G(-20, 15))
    assert [(p.generator, e) for p, e in fac.factors] == [(G(1, 2), 1), (G(2, 1), 3)]
    assert fac.value() == G(-20, 15)


def test_gcd_of_zero_pair():
    with pytest.raises(ValueError):
        gcd(0, 0)
    assert gcd(0, G(0, 3)) == G(3)


@given(nonzero, nonzero)
def test_gcd_against_trial_division(a, b):
    d = gcd(a, b)
    assert d == canonical(d)
    assert divides(d, a) and divides(d, b)
    pa, _ = prime_divisors(*a.exact_div(d))
    pb, _ = prime_divisors(*b.exact_div(d))
    assert not (pa & pb)


@given(nonzero)
def test_factor_round_trip(z):
    fac = factor(z)
    assert fac.value() == z
    assert fac.unit in UNITS
    gens = {p.generator for p, _ in fac.factors}
    assert gens == set(prime_divisors(z.re, z.im)[0])
    for p, _ in fac.factors:
        n = p.normQ
        assert sympy.isprime(n) or (sympy.isprime(math.isqrt(n)) and math.isqrt(n) % 4 == 3)


@given(nonzero)
def test_squarefree_against_oracle(z):
    assert is_squarefree(z) == prime_divisors(z.re, z.im)[1]


@given(nonzero)
def test_canonical_associate(z):
    c = canonical(z)
    assert c.re > 0 and c.im >= 0
    assert any(u * c == z for u in UNITS)


def test_count_disk():
    assert count_disk(1) == 5
    assert count_disk(2) == 13
    assert count_disk(10.5) == len(disk(110)) + 1


def test_r2_table():
    r2 = r2_table(50)
    brute = [0] * 51
    for a in range(-8, 9):
        for b in range(-8, 9):
            if a * a + b * b <= 50:
                brute[a * a + b * b] += 1
    assert r2.tolist() == brute
    assert [(n.t2, n.count) for n in norm_multiplicities(5)][1:] == [(1, 4), (2, 4), (3, 0), (4, 4), (5, 8)]


def test_prime_ideal_norms():
    assert prime_ideal_norms_up_to(13).tolist() == [2, 5, 5, 9, 13, 13]
    ideals = prime_ideals_up_to(200)
    assert [p.normQ for p in ideals] == prime_ideal_norms_up_to(200).tolist()
    assert ideals[0].generator == ONE_PLUS_I
    for p in ideals:
        assert factor(p.generator).factors[0][0].generator == p.generator


@pytest.mark.parametrize("text,value", [
    ("-20+15i", G(-20, 15)), ("3", G(3)), ("2i", G(0, 2)), ("-7", G(-7)),
    ("4-9i", G(4, -9)), ("1 + 2i", G(1, 2)), ("-3 -4i", G(-3, -4)), ("-i", G(0, -1)), ("1+i", G(1, 1)),
])
def test_parse(text, value):
    assert parse_gaussian(text) == value


@pytest.mark.parametrize("text,pos", [("", 0), ("+3", 0), ("3+", 2), ("3+4", 3), ("3+4ix", 4), ("3  +4i", 2)])
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as e:
        parse_gaussian(text)
    assert e.value.position == pos


@given(gints)
def test_literal_round_trip(z):
    s = format_gaussian(z)
    assert parse_gaussian(s) == z
    assert format_gaussian(parse_gaussian(s)) == s
