"""Generalized Newton polygons and the straightness predicates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .charseq import ExponentVector, FormalOrder, WeightSystem, formal_order
from .gadic import g_adic
from .polyring import ContractError, YPoly


class Straightness(enum.Enum):
    NOT_STRAIGHT = "not_straight"
    STRAIGHT = "straight"
    STRICTLY_STRAIGHT = "strictly_straight"


@dataclass(frozen=True)
class GNPoint:
    """The pair ``(fO(a_k), (d - k) * fO(g))`` for one index ``k``."""

    a_order: ExponentVector
    g_order_scaled: ExponentVector
    k: int

    def as_pair(self):
        return (self.a_order, self.g_order_scaled)


@dataclass(frozen=True)
class GNPolygon:
    """Generalized Newton polygon of ``f`` with respect to ``(w, G, g)``.

    ``points`` holds ``k = 0`` and every ``k`` with ``a_k != 0``.
    ``details`` keeps the formal-order evidence for each nonzero ``a_k``.
    """

    points: Tuple[GNPoint, ...]
    d: int
    g_order: ExponentVector
    details: Tuple[Tuple[int, FormalOrder], ...] = ()

    def point(self, k: int) -> Optional[GNPoint]:
        for p in self.points:
            if p.k == k:
                return p
        return None

    def point_set(self):
        return {p.as_pair() for p in self.points}

    @property
    def has_last(self) -> bool:
        return self.point(self.d) is not None

    def ties(self):
        """Indices whose formal order was attained by several support elements."""
        return [k for k, fo in self.details if fo.ambiguous]


def build_gnp(f: YPoly, w: WeightSystem, G: Sequence[YPoly], g: YPoly) -> GNPolygon:
    """Expand ``f`` in powers of ``g`` and take formal orders of the coefficients."""
    exp = g_adic(f, g)
    g_fo = formal_order(w, G, g)
    g_order = g_fo.value
    e = w.e
    points = [GNPoint(ExponentVector.zero(e), g_order * exp.d, 0)]
    details = []
    for k in range(1, exp.d + 1):
        a_k = exp.a(k)
        if not a_k:
            continue
        fo = formal_order(w, G, a_k)
        details.append((k, fo))
        points.append(GNPoint(fo.value, g_order * (exp.d - k), k))
    return GNPolygon(tuple(points), exp.d, g_order, tuple(details))


def _strictly_above(a, b, mode: str) -> bool:
    if mode == "weak":
        return all(x >= y for x, y in zip(a, b)) and any(x > y for x, y in zip(a, b))
    if mode == "strong":
        return all(x > y for x, y in zip(a, b))
    raise ValueError(f"unknown strictness mode {mode!r}")


def first_violation(p: GNPolygon, strict: bool = True, mode: str = "weak") -> Optional[GNPoint]:
    """First point breaking (strict) straightness, or ``None``.

    The endpoint ``k = d`` is reported when its order differs from
    ``d * fO(g)``.
    """
    last = p.point(p.d)
    if last is None:
        raise ContractError("a_d = 0: the base divides the polynomial")
    for pt in p.points:
        if not 1 <= pt.k <= p.d - 1:
            continue
        bound = p.g_order * pt.k
        if strict:
            ok = _strictly_above(pt.a_order, bound, mode)
        else:
            ok = bound.leq(pt.a_order)
        if not ok:
            return pt
    if last.a_order != p.g_order * p.d:
        return last
    return None


def straightness(p: GNPolygon, mode: str = "weak") -> Straightness:
    """Classify ``p`` as not straight, straight or strictly straight.

    ``mode`` selects the meaning of the strict inequality on interior points:
    ``"weak"`` (``>=`` everywhere, ``>`` somewhere) or ``"strong"`` (``>``
    in every coordinate).
    """
    if first_violation(p, strict=False) is not None:
        return Straightness.NOT_STRAIGHT
    if first_violation(p, strict=True, mode=mode) is not None:
        return Straightness.STRAIGHT
    return Straightness.STRICTLY_STRAIGHT
