"""Closed-form Gram matrices and transition matrices for every case.

Notation: ``A = |m|^(1/2)``, ``B = |f h|``, ``lam = |f| / |h|``.  Type-II
Gram matrices have the block form ``[[M, N], [-N, M]]``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .bases import GaussianRational
from .decompose import NO_MATCH, FghDecomposition
from .gaussian import GaussianInt


def _blocks(M, N) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    N = np.asarray(N, dtype=float)
    return np.block([[M, N], [-N, M]])


def _scalars(d: FghDecomposition) -> dict:
    m_abs = d.m.abs()
    f, g, h = d.f.abs(), d.g.abs(), d.h.abs()
    return dict(
        m=m_abs, A=m_abs ** 0.5, B=f * h, lam=f / h,
        g2h2=g * g * h * h, g2h4=g * g * h ** 4, fh=f * h,
        gh=complex(d.g * d.h), gh2=complex(d.g * d.h * d.h), hc=complex(d.h),
    )


def _gram_case11(s) -> np.ndarray:
    A, B, lam = s["A"], s["B"], s["lam"]
    return np.diag([8, 8 * A, 8 * B, 8 * A * lam] * 2).astype(float)


def _gram_type1(case: int, s) -> np.ndarray:
    A, B, lam = s["A"], s["B"], s["lam"]
    L = 1 + lam
    if case == 12:
        rows = [
            [8, 0, 0, 0, 0, 0, 0, 0],
            [0, 8 * A, 0, 4 * A, 0, 0, 0, -4 * A],
            [0, 0, 8 * B, 0, 0, 0, 0, 0],
            [0, 4 * A, 0, 4 * A * L, 0, 4 * A, 0, 0],
            [0, 0, 0, 0, 8, 0, 0, 0],
            [0, 0, 0, 4 * A, 0, 8 * A, 0, 4 * A],
            [0, 0, 0, 0, 0, 0, 8 * B, 0],
            [0, -4 * A, 0, 0, 0, 4 * A, 0, 4 * A * L],
        ]
    elif case == 3:
        rows = [
            [8, 0, 4, 0, 0, 0, 0, 0],
            [0, 8 * A, 0, 4 * A, 0, 0, 0, 0],
            [4, 0, 2 + 2 * B, 0, 0, 0, 0, 0],
            [0, 4 * A, 0, 2 * A * L, 0, 0, 0, 0],
            [0, 0, 0, 0, 8, 0, 4, 0],
            [0, 0, 0, 0, 0, 8 * A, 0, 4 * A],
            [0, 0, 0, 0, 4, 0, 2 + 2 * B, 0],
            [0, 0, 0, 0, 0, 4 * A, 0, 2 * A * L],
        ]
    elif case == 4:
        rows = [
            [8, 0, 0, 0, 0, 0, -4, 0],
            [0, 8 * A, 0, 0, 0, 0, 0, -4 * A],
            [0, 0, 2 + 2 * B, 0, 4, 0, 0, 0],
            [0, 0, 0, 2 * A * L, 0, 4 * A, 0, 0],
            [0, 0, 4, 0, 8, 0, 0, 0],
            [0, 0, 0, 4 * A, 0, 8 * A, 0, 0],
            [-4, 0, 0, 0, 0, 0, 2 + 2 * B, 0],
            [0, -4 * A, 0, 0, 0, 0, 0, 2 * A * L],
        ]
    elif case == 5:
        rows = [
            [8, 0, 4, 0, 0, 0, 4, 0],
            [0, 8 * A, 0, 4 * A, 0, 0, 0, 0],
            [4, 0, 4 + 4 * B, 0, -4, 0, 0, 0],
            [0, 4 * A, 0, 2 * A * L, 0, 0, 0, 0],
            [0, 0, -4, 0, 8, 0, 4, 0],
            [0, 0, 0, 0, 0, 8 * A, 0, 4 * A],
            [4, 0, 0, 0, 4, 0, 4 + 4 * B, 0],
            [0, 0, 0, 0, 0, 4 * A, 0, 2 * A * L],
        ]
    elif case == 6:
        rows = [
            [8, 0, 4, 0, 0, 0, 4, 0],
            [0, 8 * A, 0, 0, 0, 0, 0, -4 * A],
            [4, 0, 4 + 4 * B, 0, -4, 0, 0, 0],
            [0, 0, 0, 2 * A * L, 0, 4 * A, 0, 0],
            [0, 0, -4, 0, 8, 0, 4, 0],
            [0, 0, 0, 4 * A, 0, 8 * A, 0, 0],
            [4, 0, 0, 0, 4, 0, 4 + 4 * B, 0],
            [0, -4 * A, 0, 0, 0, 0, 0, 2 * A * L],
        ]
    else:
        raise ValueError(f"case {case} is not Type I")
    return np.array(rows, dtype=float)


def _gram_type2(case: int, s) -> np.ndarray:
    m, A = s["m"], s["A"]
    g2h2, g2h4, fh = s["g2h2"], s["g2h4"], s["fh"]
    gh, gh2, h = s["gh"], s["gh2"], s["hc"]
    opi, omi = 1 + 1j, 1 - 1j
    if case == 7:
        Om = g2h2 + m
        Sg = 2 * g2h4 * (1 + A + m) + 2 * m ** 1.5 / g2h4
        M = [
            [8, 0, 4 * (gh * opi).real, 4 * gh2.real],
            [0, 8 * A, 0, 4 * A * gh2.real],
            [4 * (gh * opi).real, 0, 4 * (g2h2 + fh), 2 * Om * (h * omi).real],
            [4 * gh2.real, 4 * A * gh2.real, 2 * Om * (h * omi).real, Sg],
        ]
        N = [
            [0, 0, 4 * (gh * opi).imag, 4 * gh2.imag],
            [0, 0, 0, 4 * A * gh2.imag],
            [-4 * (gh * opi).imag, 0, 0, 2 * Om * (h * omi).imag],
            [-4 * gh2.imag, -4 * A * gh2.imag, -2 * Om * (h * omi).imag, 0],
        ]
    elif case == 10:
        Om = g2h2 + m
        Sg = g2h4 * (1 + A + m) + m ** 1.5 / g2h4
        M = [
            [8, 4, 4 * gh.real, 2 * (gh2 * opi).real],
            [4, 4 * (1 + A), 2 * (gh * omi).real, 2 * (1 + A) * gh2.real],
            [4 * gh.real, 2 * (gh * omi).real, 2 * g2h2 + 2 * fh, Om * (h * opi).real],
            [2 * (gh2 * opi).real, 2 * (1 + A) * gh2.real, Om * (h * opi).real, Sg],
        ]
        N = [
            [0, 4, 4 * gh.imag, 2 * (gh2 * opi).imag],
            [-4, 0, 2 * (gh * omi).imag, 2 * (1 + A) * gh2.imag],
            [-4 * gh.imag, -2 * (gh * omi).imag, 0, Om * (h * opi).imag],
            [-2 * (gh2 * opi).imag, -2 * (1 + A) * gh2.imag, -Om * (h * opi).imag, 0],
        ]
    elif case == 8:
        Om = 2 * g2h2 * (1 + 2 * A) + 2 * fh
        Sg = 2 * g2h4 * (A + 2 * m) + 2 * m ** 1.5 / g2h4
        Lm = 2 * A * g2h2 * h * opi + 2 * m * h * omi
        M = [
            [8, 0, 4 * gh.real, 0],
            [0, 8 * A, 4 * A * (gh * omi).real, 4 * A * gh2.real],
            [4 * gh.real, 4 * A * (gh * omi).real, Om, Lm.real],
            [0, 4 * A * gh2.real, Lm.real, Sg],
        ]
        N = [
            [0, 0, 4 * gh.imag, 0],
            [0, 0, 4 * A * (gh * omi).imag, 4 * A * gh2.imag],
            [-4 * gh.imag, -4 * A * (gh * omi).imag, 0, Lm.imag],
            [0, -4 * A * gh2.imag, -Lm.imag, 0],
        ]
    elif case == 9:
        Om = 2 * (g2h2 + m)
        Sg = 2 * g2h4 * (1 + A + m) + 2 * m ** 1.5 / g2h4
        M = [
            [8, 0, 4 * gh.imag, 4 * gh2.imag],
            [0, 8 * A, 0, 4 * A * gh2.imag],
            [4 * gh.imag, 0, 2 * g2h2 + 2 * fh, Om * h.real],
            [4 * gh2.imag, 4 * A * gh2.imag, Om * h.real, Sg],
        ]
        N = [
            [0, 0, -4 * gh.real, -4 * gh2.real],
            [0, 0, 0, -4 * A * gh2.real],
            [4 * gh.real, 0, 0, Om * h.imag],
            [4 * gh2.real, 4 * A * gh2.real, -Om * h.imag, 0],
        ]
    elif case == 1:
        Om = g2h2 * (1 + 2 * A) + fh
        Sg = 0.5 * g2h4 * (1 + A + m) + m ** 1.5 / (2 * g2h4)
        Lm = 0.5 * g2h2 * h * opi + A * g2h2 * h + 0.5 * m * h * omi
        Z = -2j * gh + 2 * A * gh * omi
        M = [
            [8, 4, 2 * (gh * omi).real, 2 * gh2.real],
            [4, 4 * (1 + A), Z.real, (1 + A) * (gh2 * omi).real],
            [2 * (gh * omi).real, Z.real, Om, Lm.real],
            [2 * gh2.real, (1 + A) * (gh2 * omi).real, Lm.real, Sg],
        ]
        N = [
            [0, 4, 2 * (gh * omi).imag, 2 * gh2.imag],
            [-4, 0, Z.imag, (1 + A) * (gh2 * omi).imag],
            [-2 * (gh * omi).imag, -Z.imag, 0, Lm.imag],
            [-2 * gh2.imag, -(1 + A) * (gh2 * omi).imag, -Lm.imag, 0],
        ]
    elif case == 2:
        Om = g2h2 * (1 + A) + fh
        Sg = 0.5 * g2h4 * (1 + A + m) + m ** 1.5 / (2 * g2h4)
        Lm = (0.5 * g2h2 * (1 + A) + 0.5 * m) * h * omi
        Z = 2 * (1 + A) * gh
        M = [
            [8, 4, 2 * (gh * opi).real, 2 * gh2.real],
            [4, 4 * (1 + A), Z.real, (1 + A) * (gh2 * omi).real],
            [2 * (gh * opi).real, Z.real, Om, Lm.real],
            [2 * gh2.real, (1 + A) * (gh2 * omi).real, Lm.real, Sg],
        ]
        N = [
            [0, 4, 2 * (gh * opi).imag, 2 * gh2.imag],
            [-4, 0, Z.imag, (1 + A) * (gh2 * omi).imag],
            [-2 * (gh * opi).imag, -Z.imag, 0, Lm.imag],
            [-2 * gh2.imag, -(1 + A) * (gh2 * omi).imag, -Lm.imag, 0],
        ]
    else:
        raise ValueError(f"case {case} is not Type II")
    return _blocks(M, N)


def gram_closed_form(case, d: FghDecomposition) -> np.ndarray:
    """Evaluate the closed-form 8x8 Gram matrix of the given case at (f, g, h)."""
    if case is NO_MATCH:
        raise ValueError("no closed form for an unclassified input")
    s = _scalars(d)
    if case == 11:
        return _gram_case11(s)
    if case in (3, 4, 5, 6, 12):
        return _gram_type1(case, s)
    return _gram_type2(case, s)


# transition matrices ------------------------------------------------------

H = Fraction(1, 2)
Qr = Fraction(1, 4)

_TYPE1_C = {
    12: [
        [1, 0, 0, 0, 0, 0, 0, 0],
        [0, 1, 0, H, 0, 0, 0, -H],
        [0, 0, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, H, 0, 0, 0, H],
        [0, 0, 0, 0, 1, 0, 0, 0],
        [0, 0, 0, H, 0, 1, 0, H],
        [0, 0, 0, 0, 0, 0, 1, 0],
        [0, 0, 0, -H, 0, 0, 0, H],
    ],
    3: [
        [1, 0, H, 0, 0, 0, 0, 0],
        [0, 1, 0, H, 0, 0, 0, 0],
        [0, 0, H, 0, 0, 0, 0, 0],
        [0, 0, 0, H, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 0, H, 0],
        [0, 0, 0, 0, 0, 1, 0, H],
        [0, 0, 0, 0, 0, 0, H, 0],
        [0, 0, 0, 0, 0, 0, 0, H],
    ],
    4: [
        [1, 0, 0, 0, 0, 0, -H, 0],
        [0, 1, 0, 0, 0, 0, 0, -H],
        [0, 0, H, 0, 0, 0, 0, 0],
        [0, 0, 0, H, 0, 0, 0, 0],
        [0, 0, H, 0, 1, 0, 0, 0],
        [0, 0, 0, H, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, H, 0],
        [0, 0, 0, 0, 0, 0, 0, H],
    ],
    5: [
        [1, 0, H, 0, 0, 0, H, 0],
        [0, 1, 0, H, 0, 0, 0, 0],
        [0, 0, H, 0, 0, 0, H, 0],
        [0, 0, 0, H, 0, 0, 0, 0],
        [0, 0, -H, 0, 1, 0, H, 0],
        [0, 0, 0, 0, 0, 1, 0, H],
        [0, 0, -H, 0, 0, 0, H, 0],
        [0, 0, 0, 0, 0, 0, 0, H],
    ],
    6: [
        [1, 0, H, 0, 0, 0, H, 0],
        [0, 1, 0, 0, 0, 0, 0, -H],
        [0, 0, H, 0, 0, 0, H, 0],
        [0, 0, 0, H, 0, 0, 0, 0],
        [0, 0, -H, 0, 1, 0, H, 0],
        [0, 0, 0, H, 0, 1, 0, 0],
        [0, 0, -H, 0, 0, 0, H, 0],
        [0, 0, 0, 0, 0, 0, 0, H],
    ],
}

_C10 = [
    [1, H, 0, 0, 0, H, 0, 0],
    [0, H, 0, 0, 0, H, 0, 0],
    [0, 0, H, 0, 0, 0, -H, 0],
    [0, 0, 0, H, 0, 0, 0, H],
    [0, -H, 0, 0, 1, H, 0, 0],
    [0, -H, 0, 0, 0, H, 0, 0],
    [0, 0, H, 0, 0, 0, H, 0],
    [0, 0, 0, -H, 0, 0, 0, H],
]

SUPPORTED_TRANSITIONS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)


def _gq(z) -> GaussianRational:
    return GaussianRational.coerce(z)


def _rational_constants(case: int, d: FghDecomposition) -> dict:
    g, h = d.g, d.h
    gbhb, gbhb2 = (g * h).conj(), (g * h * h).conj()
    g2 = g.norm()
    opi, omi = _gq(GaussianInt(1, 1)), _gq(GaussianInt(1, -1))
    if case == 7:
        return {"c1": _gq(gbhb) / opi, "c2": _gq(gbhb2) / 2, "gh": _gq(g * h)}
    if case == 8:
        return {"c1": _gq(gbhb) / 2, "c2": _gq(gbhb) * opi / 2, "c3": _gq(gbhb2) / 2,
                "c4": _gq(h.conj()) * (g2 * h.norm()) * opi / 2}
    if case == 9:
        return {"c1": _gq(GaussianInt(0, 1) * gbhb) / 2, "c2": _gq(GaussianInt(0, 1) * gbhb2) / 2,
                "c3": _gq(h * h.conj() * h.conj()) * g2 / 2}
    if case == 1:
        return {"c1": opi * _gq(gbhb) / 4, "c2": _gq(gbhb) / 2, "c3": _gq(gbhb2) / 4,
                "c4": _gq(h * h.conj() * h.conj()) * g2 / 4}
    if case == 2:
        return {"c1": _gq(gbhb) * omi / 4, "c2": _gq(gbhb2) / 4,
                "c3": _gq(h * h.conj() * h.conj()) * g2 / 4}
    return {}


def transition_matrix(case: int, d: FghDecomposition | None = None) -> list[list[Fraction]]:
    """Exact transition matrix: columns are the new basis in the old one.

    Cases 3-6, 12 and all Type-II cases except 10 are relative to the
    Case-11 basis; Case 10 is relative to the Case-7 basis.
    """
    if case in _TYPE1_C:
        return [[Fraction(x) for x in row] for row in _TYPE1_C[case]]
    if case == 10:
        return [[Fraction(x) for x in row] for row in _C10]
    if case not in SUPPORTED_TRANSITIONS:
        raise ValueError(f"no transition matrix for case {case!r}")
    if d is None:
        raise ValueError(f"case {case} transition matrix depends on (f, g, h)")
    c = _rational_constants(case, d)
    Re = lambda z: z.real  # noqa: E731
    Im = lambda z: z.imag  # noqa: E731
    if case == 7:
        c1, c2, c2gh = c["c1"], c["c2"], c["c2"] * c["gh"]
        rows = [
            [1, 0, Re(c1), Re(c2), 0, 0, -Im(c1), -Im(c2)],
            [0, 1, 0, Re(c2), 0, 0, 0, -Im(c2)],
            [0, 0, H, Re(c2gh), 0, 0, H, -Im(c2gh)],
            [0, 0, 0, H, 0, 0, 0, 0],
            [0, 0, Im(c1), Im(c2), 1, 0, Re(c1), Re(c2)],
            [0, 0, 0, Im(c2), 0, 1, 0, Re(c2)],
            [0, 0, -H, Im(c2gh), 0, 0, H, Re(c2gh)],
            [0, 0, 0, 0, 0, 0, 0, H],
        ]
    elif case == 8:
        c1, c2, c3, c4 = c["c1"], c["c2"], c["c3"], c["c4"]
        rows = [
            [1, 0, Re(c1), 0, 0, 0, -Im(c1), 0],
            [0, 1, Re(c2), Re(c3), 0, 0, -Im(c2), -Im(c3)],
            [0, 0, H, Re(c4), 0, 0, 0, -Im(c4)],
            [0, 0, 0, H, 0, 0, 0, 0],
            [0, 0, Im(c1), 0, 1, 0, Re(c1), 0],
            [0, 0, Im(c2), Im(c3), 0, 1, Re(c2), Re(c3)],
            [0, 0, 0, Im(c4), 0, 0, H, Re(c4)],
            [0, 0, 0, 0, 0, 0, 0, H],
        ]
    elif case == 9:
        c1, c2, c3 = c["c1"], c["c2"], c["c3"]
        rows = [
            [1, 0, Re(c1), Re(c2), 0, 0, -Im(c1), -Im(c2)],
            [0, 1, 0, Re(c2), 0, 0, 0, -Im(c2)],
            [0, 0, H, Re(c3), 0, 0, 0, -Im(c3)],
            [0, 0, 0, H, 0, 0, 0, 0],
            [0, 0, Im(c1), Im(c2), 1, 0, Re(c1), Re(c2)],
            [0, 0, 0, Im(c2), 0, 1, 0, Re(c2)],
            [0, 0, 0, Im(c3), 0, 0, H, Re(c3)],
            [0, 0, 0, 0, 0, 0, 0, H],
        ]
    elif case == 1:
        c1, c2, c3, c4 = c["c1"], c["c2"], c["c3"], c["c4"]
        rows = [
            [1, H, Re(c1), Re(c3), 0, H, -Im(c1), -Im(c3)],
            [0, H, Re(c2), Re(c3), 0, H, -Im(c2), -Im(c3)],
            [0, 0, Qr, Re(c4), 0, 0, Qr, -Im(c4)],
            [0, 0, 0, Qr, 0, 0, 0, 0],
            [0, -H, Im(c1), Im(c3), 1, H, Re(c1), Re(c3)],
            [0, -H, Im(c2), Im(c3), 0, H, Re(c2), Re(c3)],
            [0, 0, -Qr, Im(c4), 0, 0, Qr, Re(c4)],
            [0, 0, 0, 0, 0, 0, 0, Qr],
        ]
    else:  # case 2
        c1, c2, c3 = c["c1"], c["c2"], c["c3"]
        rows = [
            [1, H, Re(c1), Re(c2), 0, H, -Im(c1), -Im(c2)],
            [0, H, Re(c1), Re(c2), 0, H, -Im(c1), -Im(c2)],
            [0, 0, Qr, Re(c3), 0, 0, Qr, -Im(c3)],
            [0, 0, 0, Qr, 0, 0, 0, 0],
            [0, -H, Im(c1), Im(c2), 1, H, Re(c1), Re(c2)],
            [0, -H, Im(c1), Im(c2), 0, H, Re(c1), Re(c2)],
            [0, 0, -Qr, Im(c3), 0, 0, Qr, Re(c3)],
            [0, 0, 0, 0, 0, 0, 0, Qr],
        ]
    return [[Fraction(x) for x in row] for row in rows]


def transition_base(case: int) -> int:
    """The case whose basis the transition matrix starts from."""
    return 7 if case == 10 else 11


def to_float(mat) -> np.ndarray:
    return np.array([[float(x) for x in row] for row in mat])


def fraction_det(mat) -> Fraction:
    """Exact determinant by Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in mat]
    n, det = len(a), Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det
