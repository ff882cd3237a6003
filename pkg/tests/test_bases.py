import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gshape.bases import (
    AlphaPoly,
    GaussianRational,
    UnclassifiedInput,
    basis_integrality,
    compare_spans,
    conjugate_polynomial,
    coordinate_matrix,
    integral_basis,
    is_algebraic_integer,
    principal_root,
    solve_rational,
)
from gshape.closed_forms import fraction_det
from gshape.decompose import decompose
from gshape.gaussian import GaussianInt
from helpers import instances, overlap_instances
from oracles import is_integral_exact

Q = GaussianRational
ints = st.integers(-50, 50)
rationals = st.builds(Q, ints, ints, st.integers(1, 12))


def as_complex(q):
    return complex(Fraction(q.a, q.d), Fraction(q.b, q.d))


@given(rationals, rationals)
def test_rational_arithmetic(x, y):
    assert abs(as_complex(x + y) - (as_complex(x) + as_complex(y))) < 1e-12
    assert abs(as_complex(x * y) - as_complex(x) * as_complex(y)) < 1e-9
    if y:
        assert (x / y) * y == x
    assert x.conj().conj() == x


def test_rational_normal_form():
    q = Q(4, -6, -8)
    assert (q.a, q.b, q.d) == (-2, 3, 4)
    assert Q.inverse_of(GaussianInt(1, 1)) == Q(1, -1, 2)
    with pytest.raises(ZeroDivisionError):
        Q(1, 1, 0)


@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4),
       st.sampled_from([GaussianInt(3), GaussianInt(1, 2), GaussianInt(-7, 4), GaussianInt(0, -6)]))
def test_alpha_multiplication_is_evaluation(c1, c2, m):
    e1, e2 = AlphaPoly(tuple(c1)), AlphaPoly(tuple(c2))
    a = principal_root(m)
    lhs = e1.mul(e2, m).evaluate(a)
    rhs = e1.evaluate(a) * e2.evaluate(a)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


@pytest.mark.parametrize("m", [GaussianInt(3), GaussianInt(-5, 2), GaussianInt(0, -6), GaussianInt(-7)])
def test_principal_root(m):
    a = principal_root(m)
    assert abs(a ** 4 - complex(m)) < 1e-9 * abs(complex(m))
    assert -cmath.pi / 4 < cmath.phase(a) <= cmath.pi / 4 + 1e-15
    assert abs(complex(principal_root(m, 40)) - a) < 1e-12


@pytest.mark.parametrize("case", range(1, 13))
def test_bases_are_integral(case):
    for d in instances()[case]:
        b = integral_basis(d, case)
        assert len(b.elements) == 8
        assert all(basis_integrality(b, d.m))
        assert all(is_integral_exact(e, d.m) for e in b.u)
        assert fraction_det(coordinate_matrix(b.elements)) != 0


def test_overlap_bases_are_integral():
    for d, case in overlap_instances(300):
        b = integral_basis(d, case)
        assert all(is_integral_exact(e, d.m) for e in b.u), (d.m, case)


def test_integrality_rejects_fractions():
    m = GaussianInt(3)
    assert not is_algebraic_integer(AlphaPoly.of(Q(1, 0, 2)), m)
    assert not is_integral_exact(AlphaPoly.of(0, Q(1, 0, 2)), m)
    assert is_algebraic_integer(AlphaPoly.of(0, 1), m)
    coeffs = conjugate_polynomial(AlphaPoly.of(0, 1), m)
    assert abs(complex(coeffs[-1]) - (-3)) < 1e-30  # prod over conjugates of alpha = -m


def test_unclassified_input():
    with pytest.raises(UnclassifiedInput):
        integral_basis(decompose(3), None)


def test_solve_rational():
    A = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    X = solve_rational(A, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]])
    assert X == [[Fraction(3, 5), Fraction(-1, 5)], [Fraction(-1, 5), Fraction(2, 5)]]
    with pytest.raises(ZeroDivisionError):
        solve_rational([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], A)


def test_overlap_witness_spans():
    rep = compare_spans(decompose(GaussianInt(0, -6)), 3, 5)
    assert rep.integral == (True, True)
    # the case-5 lattice is an index-2 sublattice of the case-3 lattice
    assert rep.second_in_first and not rep.first_in_second
    assert rep.index_ratio == Fraction(1, 2)
    assert not rep.spans_coincide
    same = compare_spans(decompose(GaussianInt(0, -6)), 3, 3)
    assert same.spans_coincide and same.index_ratio == 1
