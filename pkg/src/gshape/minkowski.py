"""Minkowski embedding, Gram matrices, projected shapes and shape parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bases import AlphaPoly, IntegralBasis, integral_basis, principal_root
from .closed_forms import gram_closed_form, to_float, transition_base, transition_matrix
from .decompose import TYPE_I, FghDecomposition, classify


class InternalConsistencyError(ArithmeticError):
    """A quantity that must be real came out with a non-negligible imaginary part."""


class DegenerateLattice(ArithmeticError):
    pass


def embedding_points(m) -> np.ndarray:
    """Images of alpha under the eight embeddings, in the order (0+,1+,2+,3+,0-,1-,2-,3-).

    tau_{k,+} sends alpha to i^k alpha; tau_{k,-} is complex conjugation
    composed with tau_{-k,+}, so it sends alpha to i^k conj(alpha).
    """
    alpha = principal_root(m)
    ik = np.array([1, 1j, -1, -1j])
    return np.concatenate([ik * alpha, ik * np.conj(alpha)])


def embed(e: AlphaPoly, m, root: Optional[complex] = None) -> np.ndarray:
    """The vector J(e) of eight complex embeddings."""
    alpha = principal_root(m) if root is None else root
    ik = np.array([1, 1j, -1, -1j])
    plus = np.array([e.evaluate(x) for x in ik * alpha])
    minus = np.array([e.evaluate(x, conjugate=True) for x in ik * np.conj(alpha)])
    return np.concatenate([plus, minus])


def embedding_matrix(elements, m, root: Optional[complex] = None) -> np.ndarray:
    return np.array([embed(e, m, root) for e in elements])


def gram_from_embeddings(E: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    G = E @ E.conj().T
    scale = max(1.0, float(np.max(np.abs(G))))
    if np.max(np.abs(G.imag)) > tol * scale:
        raise InternalConsistencyError(
            f"Gram matrix has imaginary part {np.max(np.abs(G.imag)):.3g}")
    return G.real.copy()


def gram_numeric(b: IntegralBasis, m, root: Optional[complex] = None) -> np.ndarray:
    """``<e_r, e_s> = sum_tau tau(e_r) conj(tau(e_s))`` over the eight embeddings."""
    return gram_from_embeddings(embedding_matrix(b.elements, m, root))


def gram_for(d: FghDecomposition, case: Optional[int] = None, mode: str = "numeric") -> np.ndarray:
    case = classify(d).primary if case is None else case
    if mode == "closed":
        return gram_closed_form(case, d)
    return gram_numeric(integral_basis(d, case), d.m)


def gram_via_transition(case: int, d: FghDecomposition) -> np.ndarray:
    """``C^T G_base C`` from the transition matrix and the base closed form."""
    C = to_float(transition_matrix(case, d))
    G0 = gram_closed_form(transition_base(case), d)
    return C.T @ G0 @ C


def entry_scale(*grams: np.ndarray) -> np.ndarray:
    """Natural magnitude ``sqrt(G_rr G_ss)`` of each Gram entry."""
    diag = np.max([np.abs(np.diag(G)) for G in grams], axis=0)
    return np.sqrt(np.outer(diag, diag))


def max_relative_deviation(G1: np.ndarray, G2: np.ndarray) -> float:
    """Largest entrywise ``|G1 - G2| / sqrt(G_rr G_ss)``."""
    return float(np.max(np.abs(G1 - G2) / entry_scale(G1, G2)))


def block_structure_deviation(G: np.ndarray) -> float:
    """Deviation from ``[[M, N], [-N, M]]`` with M symmetric, N antisymmetric."""
    M, N = G[:4, :4], G[:4, 4:]
    S = entry_scale(G)[:4, :4]
    devs = [
        np.abs(G[4:, 4:] - M) / S,
        np.abs(G[4:, :4] + N) / S,
        np.abs(M - M.T) / S,
        np.abs(N + N.T) / S,
    ]
    return float(max(np.max(x) for x in devs))


# projected shape ----------------------------------------------------------

@dataclass(frozen=True)
class ShapeGram6:
    entries: np.ndarray
    normalization: float  # entries = raw / normalization
    raw: np.ndarray

    def to_json(self) -> dict:
        return {"gram6": self.entries.tolist(), "normalization": self.normalization}


def project_vectors(E: np.ndarray) -> np.ndarray:
    """Remove from each embedded vector its components along J(1) and J(i)."""
    j1 = np.ones(8, dtype=complex) / math.sqrt(8)
    ji = np.array([1j] * 4 + [-1j] * 4) / math.sqrt(8)
    out = E.copy()
    for u in (j1, ji):
        # real inner product <x, u> = Re sum x conj(u)
        coef = (out @ u.conj()).real
        out = out - np.outer(coef, u)
    return out


def project_shape(b: IntegralBasis, m) -> ShapeGram6:
    """Gram of elements 2,3,4,6,7,8 projected orthogonally to J(1), J(i), scaled to det 1."""
    E = embedding_matrix(b.elements, m)
    P = project_vectors(E)[[1, 2, 3, 5, 6, 7]]
    raw = gram_from_embeddings(P)
    det = float(np.linalg.det(raw))
    if not det > 0 or np.linalg.matrix_rank(raw) < 6:
        raise DegenerateLattice("projected lattice has rank < 6")
    scale = det ** (1 / 6)
    return ShapeGram6(raw / scale, scale, raw)


# shape parameters ---------------------------------------------------------

@dataclass(frozen=True)
class ShapeParams:
    lambda1: float
    lambda2: float

    def to_json(self) -> dict:
        return {"lambda1": self.lambda1, "lambda2": self.lambda2}


def shape_params(d: FghDecomposition) -> ShapeParams:
    if not d.h or not d.g:
        raise ValueError("g and h must be nonzero")
    return ShapeParams(d.f.abs() / d.h.abs(), d.g.abs())


def iden_quantities(d: FghDecomposition) -> list[tuple[str, float, float]]:
    """(name, direct value, value predicted from |m|, lambda1, lambda2) for the six identities."""
    sp = shape_params(d)
    l1, l2 = sp.lambda1, sp.lambda2
    m = d.m.abs()
    f, g, h = d.f.abs(), d.g.abs(), d.h.abs()
    return [
        ("|h|", h, m ** 0.25 / (l1 ** 0.25 * l2 ** 0.5)),
        ("|f||h|", f * h, math.sqrt(l1) / l2 * m ** 0.5),
        ("|gh|", g * h, math.sqrt(l2) / l1 ** 0.25 * m ** 0.25),
        ("|gh^2|", g * h * h, m ** 0.5 / math.sqrt(l1)),
        ("|g|^2|h|^2", g * g * h * h, l2 / math.sqrt(l1) * m ** 0.5),
        ("|g|^2|h|^4", g * g * h ** 4, m / l1),
    ]


def iden_check(d: FghDecomposition, rtol: float = 1e-12) -> bool:
    return all(abs(a - b) <= rtol * abs(a) for _, a, b in iden_quantities(d))


# renormalization ----------------------------------------------------------

TYPE_II_EXPONENTS = (0.0, 0.25, 0.5, 1.0)


@dataclass(frozen=True)
class Renormalized:
    case: int
    matrix: np.ndarray
    limit: dict  # predicted stable entries, keyed "(r,s)" 1-based


def scaling_matrix(m_abs: float) -> np.ndarray:
    return np.diag([m_abs ** -k for k in TYPE_II_EXPONENTS] * 2)


def renormalized_gram(case: int, d: FghDecomposition, G: Optional[np.ndarray] = None) -> Renormalized:
    """Type I: ``G / (8 |m|^(1/2))``.  Type II: ``S G S`` with ``S = diag(|m|^-k)``."""
    G = gram_closed_form(case, d) if G is None else G
    m = d.m.abs()
    sp = shape_params(d)
    l1, l2 = sp.lambda1, sp.lambda2
    if case in TYPE_I:
        R = G / (8 * math.sqrt(m))
        limit = {}
        if case == 11:
            limit = {"(1,1)": 0.0, "(2,2)": 1.0, "(3,3)": math.sqrt(l1) / l2, "(4,4)": l1}
        elif case == 12:
            limit = {"(3,3)": math.sqrt(l1) / l2, "(4,4)": (1 + l1) / 2}
    else:
        S = scaling_matrix(m)
        R = S @ G @ S
        limit = {}
        if case == 1:
            limit = {"(2,2)": 4.0, "(3,3)": 2 * l2 / math.sqrt(l1), "(4,4)": 1 / (2 * l1)}
    return Renormalized(case, R, limit)
