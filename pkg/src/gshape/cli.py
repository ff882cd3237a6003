"""Command-line front end: ``python -m gshape <subcommand> ...``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from . import arithstat as ast
from .bases import UnclassifiedInput, basis_integrality, compare_spans, integral_basis
from .closed_forms import gram_closed_form
from .decompose import NotFourthPowerFree, audit_partition, classify, decompose
from .gaussian import GaussianInt, ParseError, parse_gaussian, prime_ideals_up_to
from .minkowski import (
    block_structure_deviation,
    gram_numeric,
    max_relative_deviation,
    project_shape,
    shape_params,
)

GRAM_RTOL = 1e-8
OVERLAP_WITNESS = GaussianInt(0, -6)


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload["error"])
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _clean(obj):
    """Make an object JSON-ready: floats to 12 significant digits, numpy to Python."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return float(f"{x:.12g}") if math.isfinite(x) else None
    if isinstance(obj, GaussianInt):
        return obj.to_json()
    return obj


def dumps(obj) -> str:
    return json.dumps(_clean(obj), sort_keys=True)


def _literal(text: str) -> GaussianInt:
    try:
        return parse_gaussian(text)
    except ParseError as e:
        raise UsageError(str(e)) from None


def _decompose(text: str):
    m = _literal(text)
    if not m:
        raise UsageError("m must be nonzero")
    try:
        return decompose(m)
    except NotFourthPowerFree as e:
        raise DomainError({"error": "not_fourth_power_free", "m": m,
                           "prime": e.prime, "exponent": e.exponent}) from None


def _classified(text: str, case: Optional[int] = None):
    d = _decompose(text)
    cm = classify(d)
    case = cm.primary if case is None else case
    if case is None:
        raise DomainError({"error": "no_match", "m": d.m})
    return d, cm, case


def cmd_decompose(a) -> str:
    return dumps(_decompose(a.m).to_json())


def cmd_classify(a) -> str:
    d = _decompose(a.m)
    return dumps({**d.to_json(), **classify(d).to_json()})


def cmd_basis(a) -> str:
    d, _, case = _classified(a.m, a.case)
    b = integral_basis(d, case)
    return dumps({"case": case, "elements": [str(e) for e in b.elements],
                  "integral": basis_integrality(b, d.m), "m": d.m})


def cmd_gram(a) -> str:
    d, _, case = _classified(a.m, a.case)
    out = {"case": case, "m": d.m, "mode": a.mode}
    numeric = gram_numeric(integral_basis(d, case), d.m) if a.mode != "closed" else None
    closed = gram_closed_form(case, d) if a.mode != "numeric" else None
    G = numeric if numeric is not None else closed
    out["gram"] = G
    out["block_deviation"] = block_structure_deviation(G)
    if numeric is not None and closed is not None:
        out["gram_closed"] = closed
        out["max_relative_deviation"] = max_relative_deviation(numeric, closed)
        out["consistent"] = out["max_relative_deviation"] <= GRAM_RTOL
    else:
        out["consistent"] = out["block_deviation"] <= 1e-9
    return dumps(out)


def cmd_shape(a) -> str:
    d, _, case = _classified(a.m, a.case)
    sp = shape_params(d)
    s6 = project_shape(integral_basis(d, case), d.m)
    return dumps({"case": case, "gram6": s6.entries, "lambda1": sp.lambda1,
                  "lambda2": sp.lambda2, "m": d.m, "normalization": s6.normalization})


def _rect(a) -> ast.Rectangle:
    try:
        return ast.Rectangle(a.r1lo, a.r1hi, a.r2lo, a.r2hi)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_count(a) -> str:
    res = ast.count_triples(_rect(a), a.x, "carefree" if a.carefree else "all", a.threads)
    return dumps(res.to_json())


def cmd_density(a) -> str:
    return dumps(ast.density_report(_rect(a), a.x, a.qmax, a.threads).to_json())


def cmd_density_sweep(a) -> str:
    try:
        xs = [float(t) for t in a.xs.split(",") if t]
    except ValueError:
        raise UsageError(f"bad --xs list: {a.xs!r}") from None
    r = _rect(a)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "n", "n_over_x", "theoretical", "rel_err", "residual_x14"])
    for x in xs:
        rep = ast.density_report(r, x, a.qmax, a.threads)
        w.writerow([f"{x:.12g}", rep.count] + [f"{v:.12g}" for v in
                   (rep.empirical, rep.theoretical, rep.relative_error, rep.residual_x14)])
    return buf.getvalue().rstrip("\n")


def cmd_localdensity(a) -> str:
    if a.qmax > ast.local.BUDGET_Q:
        raise DomainError({"error": "budget_exceeded", "qmax": a.qmax})
    lines = ["\t".join(("q", "bruteforce", "formula", "match"))]
    for p in prime_ideals_up_to(a.qmax):
        got = ast.local_density_bruteforce(p).admissible
        want = ast.local_density_formula(p.normQ)
        lines.append(f"{p.normQ}\t{got}\t{want}\t{str(got == want).lower()}")
    return "\n".join(lines)


def cmd_audit(a) -> str:
    rep = audit_partition(a.bound).to_json()
    rep["overlap_witness"] = compare_spans(decompose(OVERLAP_WITNESS), 3, 5).to_json()
    return dumps(rep)


def _add_m(p, with_case=False):
    p.add_argument("--m", required=True, help="Gaussian integer literal, e.g. -20+15i")
    if with_case:
        p.add_argument("--case", type=int, choices=range(1, 13),
                       help="override the primary case")


def _add_rect(p, x=True):
    if x:
        p.add_argument("--x", type=float, required=True, help="height bound X")
    p.add_argument("--r1lo", type=float, default=1.0)
    p.add_argument("--r1hi", type=float, default=2.0)
    p.add_argument("--r2lo", type=float, default=1.0)
    p.add_argument("--r2hi", type=float, default=2.0)
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $GSHAPE_THREADS or all cores)")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="gshape", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("decompose", help="m = f g^2 h^3")
    _add_m(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("classify", help="matching cases and the primary case")
    _add_m(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("basis", help="integral basis with integrality check")
    _add_m(p, True)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("gram", help="8x8 Gram matrix of the Minkowski lattice")
    _add_m(p, True)
    p.add_argument("--mode", choices=("numeric", "closed", "both"), default="both")
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("shape", help="shape parameters and projected 6x6 Gram")
    _add_m(p, True)
    p.set_defaults(fn=cmd_shape)

    p = sub.add_parser("count", help="count triples by height")
    _add_rect(p)
    p.add_argument("--carefree", action="store_true", help="also count strongly carefree triples")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("density", help="empirical vs limiting carefree density")
    _add_rect(p)
    p.add_argument("--qmax", type=int, default=ast.DEFAULT_QMAX)
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("density-sweep", help="density report over several X, as CSV")
    _add_rect(p, x=False)
    p.add_argument("--xs", default="1e4,1e5,1e6,1e7")
    p.add_argument("--qmax", type=int, default=ast.DEFAULT_QMAX)
    p.set_defaults(fn=cmd_density_sweep)

    p = sub.add_parser("localdensity", help="brute-force local densities, as TSV")
    p.add_argument("--qmax", type=int, default=29)
    p.set_defaults(fn=cmd_localdensity)

    p = sub.add_parser("audit", help="case coverage over all m up to a norm bound")
    p.add_argument("--bound", type=int, default=2000)
    p.set_defaults(fn=cmd_audit)
    return top


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # "--m -6i" would otherwise read -6i as an option
    for k in range(len(argv) - 1, 0, -1):
        if argv[k - 1] == "--m" and argv[k].startswith("-"):
            argv[k - 1:k + 1] = ["--m=" + argv[k]]
    try:
        args = parser.parse_args(argv)
        if getattr(args, "threads", None) is not None and args.threads < 1:
            raise UsageError("--threads must be positive")
        text = args.fn(args)
    except UsageError as e:
        print(e, file=err)
        return 1
    except DomainError as e:
        print(dumps(e.payload), file=out)
        return 2
    except UnclassifiedInput as e:
        print(dumps({"error": "no_match", "detail": str(e)}), file=out)
        return 2
    except ast.BudgetExceeded as e:
        print(dumps({"error": "budget_exceeded", "detail": str(e)}), file=out)
        return 2
    except (ValueError, OverflowError) as e:
        print(f"gshape: {e}", file=err)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    print(text, file=out)
    return 0


def main() -> None:
    sys.exit(run())
