"""Integral bases of O_L for L = Q(i, m^(1/4)), one per case.

Elements are polynomials of degree <= 3 in alpha (alpha^4 = m) whose
coefficients are Gaussian rationals with integer denominators; Z[i]
denominators such as 1+i are rationalized on construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .decompose import NO_MATCH, FghDecomposition
from .gaussian import GaussianInt, norm


class UnclassifiedInput(ValueError):
    """No case condition applies, so no basis can be built."""


class GaussianRational:
    """``(a + b i) / d`` in lowest terms with ``d > 0``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int = 0, b: int = 0, d: int = 1):
        if d == 0:
            raise ZeroDivisionError("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(math.gcd(a, b), d)
        self.a, self.b, self.d = a // g, b // g, d // g

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, int):
            return cls(x, 0, 1)
        z = GaussianInt.coerce(x)
        return cls(z.re, z.im, 1)

    @classmethod
    def inverse_of(cls, z) -> "GaussianRational":
        """``1/z`` for a nonzero Gaussian integer, as ``conj(z)/norm(z)``."""
        z = GaussianInt.coerce(z)
        return cls(z.re, -z.im, z.norm())

    @property
    def numerator(self) -> GaussianInt:
        return GaussianInt(self.a, self.b)

    @property
    def denominator(self) -> int:
        return self.d

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.a * o.a - self.b * o.b, self.a * o.b + self.b * o.a, self.d * o.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        n = o.a * o.a + o.b * o.b
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return self * GaussianRational(o.a * o.d, -o.b * o.d, n)

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.a, -self.b, self.d)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self.a, self.b, self.d) == (o.a, o.b, o.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a or self.b)

    def __complex__(self):
        return complex(self.a / self.d, self.b / self.d)

    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(mpmath.mpf(self.a) / self.d, mpmath.mpf(self.b) / self.d)

    @property
    def real(self):
        from fractions import Fraction
        return Fraction(self.a, self.d)

    @property
    def imag(self):
        from fractions import Fraction
        return Fraction(self.b, self.d)

    def __repr__(self):
        return f"GaussianRational({self.a}, {self.b}, {self.d})"

    def __str__(self):
        num = str(GaussianInt(self.a, self.b)) if (self.a or self.b) else "0"
        if self.d == 1:
            return num
        if self.a and self.b:
            num = f"({num})"
        return f"{num}/{self.d}"


Q = GaussianRational


@dataclass(frozen=True)
class AlphaPoly:
    """``c0 + c1 alpha + c2 alpha^2 + c3 alpha^3``."""

    coeffs: tuple[GaussianRational, GaussianRational, GaussianRational, GaussianRational]

    @classmethod
    def of(cls, *cs) -> "AlphaPoly":
        cs = list(cs) + [0] * (4 - len(cs))
        return cls(tuple(GaussianRational.coerce(c) for c in cs))

    def __add__(self, other: "AlphaPoly") -> "AlphaPoly":
        return AlphaPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c) -> "AlphaPoly":
        c = GaussianRational.coerce(c)
        return AlphaPoly(tuple(c * a for a in self.coeffs))

    def mul(self, other: "AlphaPoly", m) -> "AlphaPoly":
        """Product modulo ``alpha^4 = m``."""
        mq = GaussianRational.coerce(m)
        out = [Q() for _ in range(7)]
        for j, a in enumerate(self.coeffs):
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        for k in range(6, 3, -1):
            out[k - 4] = out[k - 4] + out[k] * mq
        return AlphaPoly(tuple(out[:4]))

    def conj_coeffs(self) -> "AlphaPoly":
        return AlphaPoly(tuple(c.conj() for c in self.coeffs))

    def evaluate(self, x: complex, conjugate: bool = False) -> complex:
        cs = [complex(c) for c in self.coeffs]
        if conjugate:
            cs = [c.conjugate() for c in cs]
        return cs[0] + x * (cs[1] + x * (cs[2] + x * cs[3]))

    def evaluate_mp(self, x, conjugate: bool = False):
        cs = [c.to_mpc() for c in self.coeffs]
        if conjugate:
            cs = [mpmath.conj(c) for c in cs]
        return cs[0] + x * (cs[1] + x * (cs[2] + x * cs[3]))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" + ("" if k == 0 else f"*a^{k}" if k > 1 else "*a"))
        return " + ".join(terms) or "0"

    def to_json(self) -> list:
        return [{"den": c.d, "im": c.b, "re": c.a} for c in self.coeffs]


I_Q = Q(0, 1)


@dataclass(frozen=True)
class IntegralBasis:
    elements: tuple[AlphaPoly, ...]
    case: int

    @property
    def u(self) -> tuple[AlphaPoly, ...]:
        return self.elements[:4]


def _over(z) -> GaussianRational:
    return GaussianRational.inverse_of(z)


def case_u(d: FghDecomposition, case: int) -> tuple[AlphaPoly, AlphaPoly, AlphaPoly, AlphaPoly]:
    """The Z[i]-basis (u1, u2, u3, u4) of O_L for the given case."""
    g, h = d.g, d.h
    G1, G2 = g * h, g * h * h
    n1, n2 = G1.norm(), G2.norm()
    opi = GaussianInt(1, 1)
    one = AlphaPoly.of(1)
    alpha = AlphaPoly.of(0, 1)
    half_alpha_plus_one = AlphaPoly.of(1, 1).scale(_over(opi))

    def P(*cs):
        return AlphaPoly.of(*cs)

    if case == 1:
        u3 = P(n1 * Q(0, 1), n1 * Q(1, 1), 1).scale(_over(2 * opi * G1))
        u4 = P(n2, n2, n2, 1).scale(_over(4 * G2))
        return one, half_alpha_plus_one, u3, u4
    if case == 2:
        u3 = P(n1 * Q(0, -1), n1 * Q(1, 1), 1).scale(_over(2 * opi * G1))
        u4 = P(n2 * Q(2, -1), n2, n2 * Q(0, 1), 1).scale(_over(4 * G2))
        return one, half_alpha_plus_one, u3, u4
    if case == 3:
        return one, alpha, P(G1, 0, 1).scale(_over(2 * G1)), P(0, 1, 0, _over(G2)).scale(Q(1, 0, 2))
    if case == 4:
        return (one, alpha, P(GaussianInt(0, 1) * G1, 0, 1).scale(_over(2 * G1)),
                P(0, I_Q, 0, _over(G2)).scale(Q(1, 0, 2)))
    if case == 5:
        return one, alpha, P(G1, 0, 1).scale(_over(opi * G1)), P(0, 1, 0, _over(G2)).scale(Q(1, 0, 2))
    if case == 6:
        return one, alpha, P(G1, 0, 1).scale(_over(opi * G1)), P(0, I_Q, 0, _over(G2)).scale(Q(1, 0, 2))
    if case == 7:
        return one, alpha, P(n1, 0, 1).scale(_over(opi * G1)), P(n2, n2, n2, 1).scale(_over(2 * G2))
    if case == 8:
        return (one, alpha, P(n1, n1 * Q(1, 1), 1).scale(_over(2 * G1)),
                P(0, n2, n2 * Q(1, 1), 1).scale(_over(2 * G2)))
    if case == 9:
        return (one, alpha, P(n1 * I_Q, 0, 1).scale(_over(2 * G1)),
                P(n2 * I_Q, n2 * I_Q, n2, 1).scale(_over(2 * G2)))
    if case == 10:
        return (one, half_alpha_plus_one, P(n1, 0, 1).scale(_over(2 * G1)),
                P(n2, n2, n2, 1).scale(_over(2 * opi * G2)))
    if case == 11:
        return one, alpha, P(0, 0, _over(G1)), P(0, 0, 0, _over(G2))
    if case == 12:
        return one, alpha, P(0, 0, _over(G1)), P(0, I_Q, 0, _over(G2)).scale(_over(opi))
    raise UnclassifiedInput(f"no integral basis for case {case!r}")


def integral_basis(d: FghDecomposition, case: Optional[int]) -> IntegralBasis:
    """Eight-element Z-basis ``[u1..u4, i*u1..i*u4]``."""
    if case is NO_MATCH:
        raise UnclassifiedInput(f"m = {d.m} matches no case condition")
    u = case_u(d, case)
    return IntegralBasis(tuple(u) + tuple(e.scale(I_Q) for e in u), case)


def principal_root(m, prec_dps: Optional[int] = None):
    """``|m|^(1/4) exp(i Arg(m) / 4)`` with ``Arg`` in (-pi, pi]."""
    z = GaussianInt.coerce(m)
    if prec_dps is None:
        r = norm(z) ** 0.125
        return r * complex(math.cos(math.atan2(z.im, z.re) / 4), math.sin(math.atan2(z.im, z.re) / 4))
    with mpmath.workdps(prec_dps):
        w = mpmath.mpc(z.re, z.im)
        return mpmath.root(abs(w), 4) * mpmath.expjpi(mpmath.arg(w) / (4 * mpmath.pi))


def conjugate_polynomial(e: AlphaPoly, m, dps: int = 60) -> list:
    """Coefficients (highest first) of prod_k (x - e(i^k alpha)), computed at ``dps`` digits."""
    with mpmath.workdps(dps):
        alpha = principal_root(m, dps)
        roots = [e.evaluate_mp(alpha * mpmath.mpc(0, 1) ** k) for k in range(4)]
        coeffs = [mpmath.mpc(1)]
        for r in roots:
            nxt = coeffs + [mpmath.mpc(0)]
            for j in range(1, len(nxt)):
                nxt[j] -= r * coeffs[j - 1]
            coeffs = nxt
        return coeffs


def is_algebraic_integer(e: AlphaPoly, m, tol: float = 1e-6) -> bool:
    """True iff every coefficient of the conjugate polynomial is within ``tol`` of Z[i]."""
    with mpmath.workdps(60):
        for c in conjugate_polynomial(e, m):
            if abs(c.real - mpmath.nint(c.real)) > tol or abs(c.imag - mpmath.nint(c.imag)) > tol:
                return False
    return True


def basis_integrality(b: IntegralBasis, m) -> list[bool]:
    return [is_algebraic_integer(e, m) for e in b.elements]


def coordinate_matrix(elements: Sequence[AlphaPoly]) -> list[list]:
    """Rational 8x8 matrix whose columns are the elements in the Q-basis
    (1, a, a^2, a^3, i, i a, i a^2, i a^3)."""
    cols = []
    for e in elements:
        col = [Fraction(0)] * 8
        for k, c in enumerate(e.coeffs):
            col[k] = c.real
            col[4 + k] = c.imag
        cols.append(col)
    return [[cols[c][r] for c in range(len(cols))] for r in range(8)]


def solve_rational(A, B) -> list[list[Fraction]]:
    """``A^-1 B`` for a square invertible Fraction matrix A, by Gauss-Jordan elimination."""
    n = len(A)
    M = [list(map(Fraction, A[r])) + list(map(Fraction, B[r])) for r in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [v * inv for v in M[c]]
        for r in range(n):
            if r != c and M[r][c] != 0:
                k = M[r][c]
                M[r] = [a - k * b for a, b in zip(M[r], M[c])]
    return [row[n:] for row in M]


@dataclass(frozen=True)
class SpanComparison:
    """How the Z-spans of two bases of the same field relate."""

    m: GaussianInt
    cases: tuple[int, int]
    integral: tuple[bool, bool]
    first_in_second: bool  # every element of the first basis is a Z-combination of the second
    second_in_first: bool
    index_ratio: Fraction  # covolume(first) / covolume(second)

    @property
    def spans_coincide(self) -> bool:
        return self.first_in_second and self.second_in_first

    def to_json(self) -> dict:
        a, b = self.cases
        return {"cases": [a, b], "index_ratio": str(self.index_ratio),
                "integral": {str(a): self.integral[0], str(b): self.integral[1]},
                "first_in_second": self.first_in_second, "m": str(self.m),
                "second_in_first": self.second_in_first, "spans_coincide": self.spans_coincide}


def compare_spans(d: FghDecomposition, case_a: int, case_b: int) -> SpanComparison:
    ba, bb = integral_basis(d, case_a), integral_basis(d, case_b)
    A, B = coordinate_matrix(ba.elements), coordinate_matrix(bb.elements)
    T = solve_rational(B, A)  # A = B T
    Tinv = solve_rational(A, B)
    from .closed_forms import fraction_det

    return SpanComparison(
        d.m, (case_a, case_b),
        (all(basis_integrality(ba, d.m)), all(basis_integrality(bb, d.m))),
        all(v.denominator == 1 for row in T for v in row),
        all(v.denominator == 1 for row in Tinv for v in row),
        abs(fraction_det(A) / fraction_det(B)),
    )
