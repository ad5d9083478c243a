"""Irreducibility test for quasi-ordinary polynomials.

The test builds the approximate roots ``g_k = App_{d_k}(f)``, the generators
``r_k`` and the lattice indices ``d_k`` step by step, then checks

i)   the indices reach ``d_{h+1} = 1`` (strictly decreasing on the way);
ii)  ``r_k d_k < r_{k+1} d_{k+1}`` for ``1 <= k < h``;
iii) ``g_k`` is strictly straight w.r.t. ``(r^k, G^k, g_{k-1})`` for
     ``2 <= k <= h+1`` (with ``g_{h+1} = f``).

Vector inequalities default to the *weak* reading (``<=`` in every
coordinate, ``<`` in at least one); ``Config(strictness="strong")`` makes
them strict in every coordinate.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .charseq import (
    CharData,
    ExponentVector,
    InconsistencyError,
    WeightSystem,
    formal_order,
    gcd_minors,
    next_d,
    r_m_convert,
    vector_less,
)
from .gadic import approximate_root, g_adic
from .gnp import GNPolygon, Straightness, build_gnp, first_violation, straightness
from .polyring import ContractError, MPoly, YPoly, exp_lex
from .polyring import format_ypoly


class Verdict(enum.Enum):
    IRREDUCIBLE = "irreducible_quasi_ordinary"
    NOT_IRREDUCIBLE = "not_irreducible_quasi_ordinary"


class FailureKind(enum.Enum):
    TRIVIAL_FACTOR_Y = "trivial_factor_y"
    LATTICE_STAGNATION = "lattice_stagnation"
    LATTICE_VIOLATION = "lattice_violation"
    ORDERING_VIOLATION = "ordering_violation"
    STRAIGHTNESS_VIOLATION = "straightness_violation"
    BASE_DIVIDES_F = "base_divides_f"
    AMBIGUOUS_INITIAL_MONOMIAL = "ambiguous_initial_monomial"


class InternalError(RuntimeError):
    pass


@dataclass(frozen=True)
class FailureReason:
    kind: FailureKind
    step: int
    witness: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Config:
    strictness: str = "weak"

    def __post_init__(self):
        if self.strictness not in ("weak", "strong"):
            raise ValueError(f"strictness must be 'weak' or 'strong', not {self.strictness!r}")


@dataclass
class Report:
    """Verdict plus every intermediate object the test produced.

    ``D_seq``, ``d_seq`` and ``r_seq`` hold whatever was computed before the
    test stopped; ``char_data`` is only set on success.  ``polygons`` pairs
    each checked index ``k`` with its polygon.
    """

    verdict: Verdict
    polynomial: YPoly
    normalization_shift: MPoly
    config: Config = field(default_factory=Config)
    reason: Optional[FailureReason] = None
    char_data: Optional[CharData] = None
    D_seq: List[int] = field(default_factory=list)
    d_seq: List[int] = field(default_factory=list)
    r_seq: List[ExponentVector] = field(default_factory=list)
    approximate_roots: List[YPoly] = field(default_factory=list)
    polygons: List[Tuple[int, GNPolygon]] = field(default_factory=list)
    semigroup_generators: List[ExponentVector] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def irreducible(self) -> bool:
        return self.verdict is Verdict.IRREDUCIBLE

    def to_dict(self) -> Dict[str, Any]:
        """JSON-compatible layout; rationals are rendered as ``"p/q"`` strings."""
        cd = self.char_data
        e_seq = list(cd.e_seq) if cd else [a // b for a, b in zip(self.d_seq, self.d_seq[1:])]
        return {
            "verdict": self.verdict.value,
            "reason": None if self.reason is None else {
                "kind": self.reason.kind.value,
                "step": self.reason.step,
                "witness": _jsonable(self.reason.witness),
            },
            "polynomial": format_ypoly(self.polynomial),
            "normalization_shift": format_ypoly(self.normalization_shift),
            "D_sequence": list(self.D_seq),
            "d_sequence": list(self.d_seq),
            "e_sequence": e_seq,
            "r_sequence": [_vec(r) for r in self.r_seq],
            "m_sequence": [_vec(m) for m in cd.m_seq] if cd else None,
            "semigroup_generators": [_vec(v) for v in self.semigroup_generators],
            "approximate_roots": [format_ypoly(g) for g in self.approximate_roots],
            "polygons": [polygon_to_dict(k, p) for k, p in self.polygons],
            "notes": list(self.notes),
            "config": {"strictness": self.config.strictness},
        }


def _vec(v) -> List[str]:
    return [str(Fraction(c)) for c in v]


def _jsonable(obj):
    if isinstance(obj, ExponentVector):
        return _vec(obj)
    if isinstance(obj, (YPoly, MPoly)):
        return format_ypoly(obj)
    if isinstance(obj, GNPolygon):
        return polygon_to_dict(None, obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, enum.Enum):
        return obj.value
    return obj


def polygon_to_dict(k: Optional[int], p: GNPolygon) -> Dict[str, Any]:
    out = {
        "d": p.d,
        "g_order": _vec(p.g_order),
        "points": [{"k": pt.k, "a_order": _vec(pt.a_order), "g_order_scaled": _vec(pt.g_order_scaled)}
                   for pt in p.points],
    }
    if k is not None:
        out["index"] = k
    return out


def normalize_a1(f: YPoly) -> Tuple[YPoly, MPoly]:
    """Remove the ``y**(n-1)`` term: return ``(f(y - a_1/n), a_1/n)``."""
    if not f.is_monic() or f.degree < 1:
        raise ContractError("f must be monic of positive degree")
    shift = f.a(1) / f.degree
    if not shift:
        return f, shift
    return f.shift(-shift), shift


def binomial_irreducible(n: int, alpha) -> bool:
    """``y^n - c x^alpha`` is irreducible exactly when ``gcd(n, alpha) = 1``."""
    if n < 1:
        raise ContractError("n must be positive")
    return math.gcd(n, *[int(a) for a in alpha]) == 1


class _Failure(Exception):
    def __init__(self, kind: FailureKind, step: int, **witness):
        super().__init__(kind.value)
        self.reason = FailureReason(kind, step, witness)


def analyze(f: YPoly, config: Optional[Config] = None) -> Report:
    """Decide whether ``f`` is an irreducible quasi-ordinary polynomial."""
    config = config or Config()
    if not f.is_monic() or f.degree < 1:
        raise ContractError("f must be monic in y of positive degree")
    n, e = f.degree, f.nvars
    fn, shift = normalize_a1(f)
    report = Report(Verdict.NOT_IRREDUCIBLE, fn, shift, config)
    if shift:
        report.notes.append(f"substituted y -> y - ({format_ypoly(shift)}) to remove the y^{n - 1} term")
    r0 = [ExponentVector.unit(i, e, n) for i in range(e)]
    report.D_seq.append(n ** e)
    report.d_seq.append(n)
    report.approximate_roots.append(YPoly.y(e))
    if n == 1:
        return _succeed(report, n, e, r0)
    try:
        _run(report, fn, n, e, config)
    except _Failure as failure:
        report.reason = failure.reason
        return report
    return _succeed(report, n, e, r0)


def _succeed(report: Report, n: int, e: int, r0) -> Report:
    r_seq = tuple(report.r_seq)
    e_seq = tuple(a // b for a, b in zip(report.d_seq, report.d_seq[1:]))
    try:
        m_seq = tuple(r_m_convert("r->m", r_seq, e_seq))
    except InconsistencyError as exc:
        report.notes.append(f"characteristic exponents unavailable: {exc}")
        m_seq = ()
    report.char_data = CharData(n, e, tuple(report.D_seq), tuple(report.d_seq), e_seq, r_seq, m_seq)
    if len(r_seq) > 1:
        report.notes.append("m-sequence recovered from r via r_{k+1} = e_k r_k + m_{k+1} - m_k")
    report.semigroup_generators = list(r0) + list(r_seq)
    report.verdict = Verdict.IRREDUCIBLE
    return report


def _run(report: Report, f: YPoly, n: int, e: int, config: Config) -> None:
    a_n = f.a(n)
    if not a_n:
        raise _Failure(FailureKind.TRIVIAL_FACTOR_Y, 1, constant_term="0")
    r = report.r_seq
    d = report.d_seq
    D = report.D_seq
    roots = report.approximate_roots
    r.append(ExponentVector(exp_lex(a_n).exponent))

    cap = n.bit_length() + 1
    for k in range(1, cap + 2):
        if k > cap:
            raise InternalError(f"gcd-sequence did not terminate within {cap} steps")
        if not r[-1].is_integral():
            raise _Failure(FailureKind.LATTICE_VIOLATION, k, r=r[-1])
        D_next = gcd_minors(n, r, e)
        d_next = next_d(n, e, D_next)
        if d_next is None:
            raise _Failure(FailureKind.LATTICE_VIOLATION, k + 1, D=D_next, n_power=n ** (e - 1))
        D.append(D_next)
        d.append(d_next)
        if d_next == d[-2]:
            raise _Failure(FailureKind.LATTICE_STAGNATION, k + 1, d=d_next, r=r[-1])
        if d_next == 1:
            break
        g = approximate_root(f, d_next)
        roots.append(g)
        beta = g_adic(f, g).a(d_next)
        if not beta:
            raise _Failure(FailureKind.BASE_DIVIDES_F, k + 1, base=g)
        w = WeightSystem.scaled(n, e, r, d_next)
        fo = formal_order(w, roots[:-1], beta)
        if fo.ambiguous:
            raise _Failure(FailureKind.AMBIGUOUS_INITIAL_MONOMIAL, k + 1, value=fo.value,
                           thetas=[fo.theta, *fo.ties])
        if fo.incomparable:
            report.notes.append(
                f"r_{k + 1}: minimum {fo.value!r} is not componentwise below every competitor")
        r.append(fo.value)

    h = len(r)
    for k in range(1, h):
        lhs, rhs = r[k - 1] * d[k - 1], r[k] * d[k]
        if not vector_less(lhs, rhs, config.strictness):
            raise _Failure(FailureKind.ORDERING_VIOLATION, k, lhs=lhs, rhs=rhs)

    for k in range(2, h + 2):
        g_k = roots[k - 1] if k <= h else f
        base = roots[k - 2]
        w = WeightSystem.scaled(n, e, r[:k - 1], d[k - 1])
        poly = build_gnp(g_k, w, roots[:k - 1], base)
        report.polygons.append((k, poly))
        if not poly.has_last:
            raise _Failure(FailureKind.BASE_DIVIDES_F, k, base=base)
        tied = poly.ties()
        if tied:
            raise _Failure(FailureKind.AMBIGUOUS_INITIAL_MONOMIAL, k, coefficients=tied)
        if straightness(poly, config.strictness) is not Straightness.STRICTLY_STRAIGHT:
            bad = first_violation(poly, strict=True, mode=config.strictness)
            raise _Failure(FailureKind.STRAIGHTNESS_VIOLATION, k, k_index=bad.k,
                           point=[bad.a_order, bad.g_order_scaled],
                           bound=poly.g_order * bad.k, polygon=poly)


def check_order_bound(report: Report, F: YPoly, order: Optional[ExponentVector],
                      config: Optional[Config] = None) -> Optional[bool]:
    """Check that a large order against an irreducible ``f`` forces irreducibility.

    ``order`` is ``O(f, F)`` (``None`` meaning infinite, i.e. ``F = f``).
    Returns ``None`` when the premises do not hold (``f`` not irreducible,
    degree mismatch, or ``O(f, F)`` not above ``r_h d_h`` in every
    coordinate); otherwise whether ``analyze(F)`` reports irreducible.
    """
    if not report.irreducible or report.char_data is None:
        return None
    if not F.is_monic() or F.degree != report.polynomial.degree:
        return None
    cd = report.char_data
    if cd.h:
        bound = cd.r_seq[-1] * cd.d_seq[cd.h - 1]
        if order is not None and not all(a > b for a, b in zip(order, bound)):
            return None
    return analyze(F, config).irreducible
