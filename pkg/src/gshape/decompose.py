"""Decomposition m = f g^2 h^3 and the twelve integral-basis cases.

Congruence conditions are evaluated on the representatives fixed by
:func:`decompose`: ``g`` and ``h`` are canonical associates and the unit of
``m`` is carried by ``f``.  "Even" means divisible by ``1+i``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .gaussian import (
    ONE,
    ONE_PLUS_I,
    GaussianInt,
    are_coprime,
    canonical,
    divides,
    factor,
    is_squarefree,
)

NO_MATCH = None  # the distinguished "unclassified" CaseId

TYPE_I = (3, 4, 5, 6, 11, 12)
TYPE_II = (1, 2, 7, 8, 9, 10)

_G = GaussianInt
_FOUR = _G(4)
_EIGHT = _G(8)
_TWO = _G(2)
_TWO_ONE_PLUS_I = _G(2, 2)  # 2(1+i)


class NotFourthPowerFree(ValueError):
    """Some Gaussian prime divides m to exponent >= 4."""

    def __init__(self, m, prime=None, exponent=None):
        super().__init__(f"{m} is not fourth-power-free"
                         + (f" ({prime}^{exponent} divides it)" if prime is not None else ""))
        self.m = m
        self.prime = prime
        self.exponent = exponent


@dataclass(frozen=True)
class FghDecomposition:
    m: GaussianInt
    f: GaussianInt
    g: GaussianInt
    h: GaussianInt

    def validate(self) -> None:
        f, g, h = self.f, self.g, self.h
        if f * g * g * h * h * h != self.m:
            raise ValueError("f g^2 h^3 != m")
        for x in (f, g, h):
            if not is_squarefree(x):
                raise ValueError(f"{x} is not squarefree")
        for a, b in ((f, g), (f, h), (g, h)):
            if not are_coprime(a, b):
                raise ValueError(f"{a} and {b} are not coprime")

    def to_json(self) -> dict:
        return {k: getattr(self, k).to_json() for k in ("f", "g", "h", "m")}


def decompose(m) -> FghDecomposition:
    m = GaussianInt.coerce(m)
    if not m:
        raise ValueError("m must be nonzero")
    fac = factor(m)
    f, g, h = fac.unit, ONE, ONE
    for p, e in fac.factors:
        if e >= 4:
            raise NotFourthPowerFree(m, p.generator, e)
        if e == 1:
            f = f * p.generator
        elif e == 2:
            g = g * p.generator
        else:
            h = h * p.generator
    g, h = canonical(g), canonical(h)
    f = m.exact_div(g * g * h * h * h)
    return FghDecomposition(m, f, g, h)


def is_fourth_power_free(m) -> bool:
    m = GaussianInt.coerce(m)
    return bool(m) and all(e < 4 for _, e in factor(m).factors)


def defines_octic_field(d: FghDecomposition) -> bool:
    """True iff x^4 - m is irreducible over Q(i).

    For fourth-power-free m this fails exactly when m is a square in Z[i],
    i.e. ``h = 1`` and ``f = +-1``.
    """
    return not (d.h == ONE and d.f in (ONE, -ONE))


def residue_match(z, target, modulus) -> bool:
    """True iff ``modulus`` divides ``z - target`` in Z[i]."""
    modulus = GaussianInt.coerce(modulus)
    if not modulus:
        raise ValueError("modulus must be nonzero")
    return divides(modulus, GaussianInt.coerce(z) - GaussianInt.coerce(target))


def _pm1(z, modulus) -> bool:
    return residue_match(z, 1, modulus) or residue_match(z, -1, modulus)


def _even(z) -> bool:
    return divides(ONE_PLUS_I, z)


def row_conditions(d: FghDecomposition) -> dict[int, bool]:
    """Truth value of every case condition for ``d``."""
    m, f, g, h = d.m, d.f, d.g, d.h
    fh = f * h
    fhbar = f * h.conj()
    m2i4 = residue_match(m, _G(0, 2), _FOUR)
    rows56 = m2i4 and _pm1(fh, _TWO_ONE_PLUS_I)
    return {
        1: residue_match(m, 1, _EIGHT),
        2: residue_match(m, _G(1, 4), _EIGHT),
        3: m2i4 and residue_match(fh, 1, _FOUR),
        4: m2i4 and residue_match(fh, -1, _FOUR),
        5: rows56 and residue_match(fhbar, 1, _TWO_ONE_PLUS_I),
        6: rows56 and residue_match(fhbar, -1, _TWO_ONE_PLUS_I),
        7: residue_match(m, _G(3, 2), _FOUR),
        8: residue_match(m, _G(1, 2), _FOUR),
        9: residue_match(m, 3, _FOUR),
        10: residue_match(m, 5, _EIGHT) or residue_match(m, _G(5, 4), _EIGHT),
        11: _even(f) or _even(h) or residue_match(m, _G(0, 1), _TWO),
        12: residue_match(fh, _G(0, 1), _TWO) and _even(g),
    }


# rows 3/4 precede 5/6 when both match; other rows are disjoint in practice
PRECEDENCE = (11, 12, 3, 4, 5, 6, 1, 2, 10, 7, 8, 9)


@dataclass(frozen=True)
class CaseMatch:
    matches: frozenset[int]
    primary: Optional[int]

    def to_json(self) -> dict:
        return {"matches": sorted(self.matches),
                "primary": self.primary if self.primary is not None else "none"}


def classify(d: FghDecomposition) -> CaseMatch:
    rows = row_conditions(d)
    matches = frozenset(k for k, ok in rows.items() if ok)
    primary = next((k for k in PRECEDENCE if k in matches), NO_MATCH)
    return CaseMatch(matches, primary)


def classify_m(m) -> tuple[FghDecomposition, CaseMatch]:
    d = decompose(m)
    return d, classify(d)


def iter_fourth_power_free(norm_bound: int):
    """All fourth-power-free m with 0 < norm(m) <= norm_bound, in (norm, re, im) order."""
    import math

    r = math.isqrt(norm_bound)
    pts = [(a * a + b * b, a, b) for a in range(-r, r + 1) for b in range(-r, r + 1)
           if 0 < a * a + b * b <= norm_bound]
    pts.sort()
    for _, a, b in pts:
        m = GaussianInt(a, b)
        try:
            yield decompose(m)
        except NotFourthPowerFree:
            continue


def residue_class_mod_l6(m: GaussianInt) -> str:
    """Label of m modulo (1+i)^6 = -8i, i.e. modulo 8."""
    return f"{m.re % 8}+{m.im % 8}i"


@dataclass
class AuditReport:
    sample_bound: int
    total: int = 0
    size_counts: Counter = field(default_factory=Counter)
    by_residue: dict = field(default_factory=dict)
    primary_counts: Counter = field(default_factory=Counter)
    unmatched: list = field(default_factory=list)
    multiple: list = field(default_factory=list)
    overlap_patterns: Counter = field(default_factory=Counter)
    case2_table: int = 0
    case2_mod16: int = 0
    case2_both: int = 0
    rows34_imply_56: bool = True

    def to_json(self) -> dict:
        return {
            "by_residue": {k: dict(sorted(v.items())) for k, v in sorted(self.by_residue.items())},
            "case2_predicates": {"both": self.case2_both, "m_1_4i_mod_8": self.case2_table,
                                 "m_5_mod_16": self.case2_mod16},
            "multiple": [str(m) for m in self.multiple],
            "overlap_patterns": {",".join(map(str, sorted(k))): v
                                 for k, v in sorted(self.overlap_patterns.items())},
            "primary_counts": {str(k): v for k, v in sorted(self.primary_counts.items(),
                                                            key=lambda kv: (kv[0] is None, kv[0] or 0))},
            "rows34_imply_56": self.rows34_imply_56,
            "sample_bound": self.sample_bound,
            "size_counts": {"0": self.size_counts[0], "1": self.size_counts[1],
                            ">=2": self.size_counts[2]},
            "total": self.total,
            "unmatched": [str(m) for m in self.unmatched],
        }


def audit_partition(sample_bound: int) -> AuditReport:
    """Scan all fourth-power-free m with norm <= sample_bound and tabulate case coverage."""
    if sample_bound < 2:
        raise ValueError("sample_bound must be at least 2")
    rep = AuditReport(sample_bound)
    for d in iter_fourth_power_free(sample_bound):
        cm = classify(d)
        size = min(len(cm.matches), 2)
        rep.total += 1
        rep.size_counts[size] += 1
        cls = rep.by_residue.setdefault(residue_class_mod_l6(d.m), Counter())
        cls[["0", "1", ">=2"][size]] += 1
        rep.primary_counts[cm.primary] += 1
        if size == 0:
            rep.unmatched.append(d.m)
        elif size == 2:
            rep.multiple.append(d.m)
            rep.overlap_patterns[cm.matches] += 1
        t = residue_match(d.m, _G(1, 4), _EIGHT)
        s = residue_match(d.m, 5, _G(16))
        rep.case2_table += t
        rep.case2_mod16 += s
        rep.case2_both += t and s
        fh = d.f * d.h
        if _pm1(fh, _FOUR) and not _pm1(fh, _TWO_ONE_PLUS_I):
            rep.rows34_imply_56 = False
    return rep
