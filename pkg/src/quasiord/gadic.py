"""g-adic and G-adic expansions, Tschirnhausen transform, approximate roots."""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .polyring import ContractError, MPoly, YPoly, divmod_y


@dataclass(frozen=True)
class GAdicExpansion:
    """``f = g**d + sum(a_i * g**(d - i) for i = 1..d)`` with ``deg a_i < deg g``.

    ``coefficients[i - 1]`` holds ``a_i``; ``a_0 = 1`` is implicit.
    """

    base: YPoly
    d: int
    coefficients: Tuple[YPoly, ...]

    def a(self, i: int) -> YPoly:
        if i == 0:
            return YPoly.one(self.base.nvars)
        return self.coefficients[i - 1]

    def reconstruct(self) -> YPoly:
        result = YPoly.one(self.base.nvars)
        for a in self.coefficients:
            result = result * self.base + a
        return result


def base_digits(F: YPoly, g: YPoly) -> list:
    """Digits ``c_j`` with ``F = sum(c_j * g**j)`` and ``deg c_j < deg g``."""
    digits = []
    q = F
    while q:
        q, r = divmod_y(q, g)
        digits.append(r)
    return digits


def g_adic(f: YPoly, g: YPoly) -> GAdicExpansion:
    """The g-adic expansion of a monic ``f`` with respect to a monic ``g``."""
    if not f.is_monic() or not g.is_monic():
        raise ContractError("g-adic expansion needs monic f and g")
    if g.degree < 1 or f.degree % g.degree:
        raise ContractError(f"deg g = {g.degree} does not divide deg f = {f.degree}")
    d = f.degree // g.degree
    digits = base_digits(f, g)
    # digits[d] is the constant 1 because both polynomials are monic
    zero = YPoly.zero(f.nvars)
    digits += [zero] * (d + 1 - len(digits))
    return GAdicExpansion(g, d, tuple(digits[d - i] for i in range(1, d + 1)))


@dataclass(frozen=True)
class GSupport:
    """G-adic expansion ``F = sum(a_theta * g_1**theta_1 * ... * g_h**theta_h)``.

    Only nonzero coefficients are stored in ``entries``.
    """

    bases: Tuple[YPoly, ...]
    bounds: Tuple[Optional[int], ...]
    entries: Dict[Tuple[int, ...], MPoly]

    def support(self):
        return sorted(self.entries)

    def reconstruct(self) -> YPoly:
        nvars = self.bases[0].nvars
        total = YPoly.zero(nvars)
        for theta, c in self.entries.items():
            term = YPoly.from_mpoly(c)
            for g, k in zip(self.bases, theta):
                if k:
                    term = term * g ** k
            total = total + term
        return total


def G_bounds(G: Sequence[YPoly]) -> Tuple[Optional[int], ...]:
    """The bounds ``e_i = deg g_{i+1} / deg g_i`` (last one unbounded)."""
    out = []
    for lo, hi in zip(G, G[1:]):
        if hi.degree % lo.degree:
            raise ContractError(f"deg {lo.degree} does not divide deg {hi.degree}")
        out.append(hi.degree // lo.degree)
    out.append(None)
    return tuple(out)


def G_adic(F: YPoly, G: Sequence[YPoly], e_bounds: Optional[Sequence[Optional[int]]] = None) -> GSupport:
    """Expand ``F`` over ``G = (g_1, ..., g_h)``.

    ``g_1`` must be linear in ``y`` so that the coefficients lie in the
    coefficient ring; ``e_bounds`` (``e_1..e_{h-1}`` followed by ``None`` or
    ``math.inf``) is checked against the degrees when given.
    """
    G = tuple(G)
    if not G:
        raise ContractError("G must contain at least one base")
    for g in G:
        if not g.is_monic():
            raise ContractError("G-adic bases must be monic")
    if G[0].degree != 1:
        raise ContractError("the first base must have y-degree 1")
    bounds = G_bounds(G)
    if e_bounds is not None:
        given = tuple(None if (b is None or b == math.inf) else int(b) for b in e_bounds)
        if given != bounds:
            raise ContractError(f"bounds {given} do not match base degrees {bounds}")
    entries: Dict[Tuple[int, ...], MPoly] = {}

    def expand(P: YPoly, h: int, suffix: Tuple[int, ...]):
        if h == 0:
            # P has y-degree < deg g_1 = 1
            if P:
                entries[suffix] = P.coeff(0)
            return
        for j, digit in enumerate(base_digits(P, G[h - 1])):
            if digit:
                expand(digit, h - 1, (j,) + suffix)

    expand(F, len(G), ())
    return GSupport(G, bounds, entries)


def first_coefficient(f: YPoly, g: YPoly) -> YPoly:
    """``a_1`` of the g-adic expansion, as ``quo(f, g**(d-1)) - g``.

    Every term past ``a_1 g**(d-1)`` has degree below ``deg g**(d-1)``, so a
    single division suffices.
    """
    if not f.is_monic() or not g.is_monic():
        raise ContractError("g-adic expansion needs monic f and g")
    if g.degree < 1 or f.degree % g.degree:
        raise ContractError(f"deg g = {g.degree} does not divide deg f = {f.degree}")
    d = f.degree // g.degree
    if d == 1:
        return f - g
    q, _ = divmod_y(f, g ** (d - 1))
    return q - g


def tschirnhausen(f: YPoly, g: YPoly) -> YPoly:
    """``tau_f(g) = g + a_1 / d`` for the g-adic expansion of ``f``."""
    return g + first_coefficient(f, g) / (f.degree // g.degree)


def approximate_root(f: YPoly, d: int) -> YPoly:
    """The unique monic ``g`` of degree ``n/d`` with ``deg(f - g**d) < n - n/d``.

    Writing ``f = y**n (1 + u)`` with ``u`` in ``y**-1``, ``g`` is the
    polynomial part of ``y**(n/d) (1 + u)**(1/d)``.  The binomial series is
    truncated after ``n/d`` terms; the matching of the top coefficients is
    triangular, so only ``a_1 .. a_{n/d}`` of ``f`` enter.
    """
    if d < 1:
        raise ContractError("d must be positive")
    if not f.is_monic():
        raise ContractError("approximate roots need a monic polynomial")
    n = f.degree
    if n % d:
        raise ContractError(f"{d} does not divide deg f = {n}")
    m = n // d
    nvars = f.nvars
    zero = MPoly.zero(nvars)
    u = [zero] + [f.coeff(n - k) for k in range(1, m + 1)]
    series = [MPoly.constant(1, nvars)] + [zero] * m
    power = list(series)
    binom = Fraction(1)
    for j in range(1, m + 1):
        power = _series_mul(power, u, m)
        binom = binom * (Fraction(1, d) - (j - 1)) / j
        if not any(power):
            break
        series = [a + b * binom for a, b in zip(series, power)]
    g = YPoly([series[m - i] for i in range(m + 1)], nvars)
    if first_coefficient(f, g):
        raise ArithmeticError("approximate root failed the fixed-point check")
    return g


def _series_mul(a, b, top):
    """Product of two series in ``y**-1`` keeping indices ``0..top``."""
    out = [MPoly.zero(a[0].nvars)] * (top + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(top + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + x * b[j]
    return out


def approximate_root_by_iteration(f: YPoly, d: int, start: Optional[YPoly] = None,
                                  max_steps: Optional[int] = None) -> YPoly:
    """Iterate the Tschirnhausen transform from ``start`` until it is fixed."""
    n = f.degree
    if n % d:
        raise ContractError(f"{d} does not divide deg f = {n}")
    g = start if start is not None else YPoly.y(f.nvars) ** (n // d)
    if g.degree != n // d or not g.is_monic():
        raise ContractError("start must be monic of degree n/d")
    steps = max_steps if max_steps is not None else n // d + 1
    for _ in range(steps + 1):
        nxt = tschirnhausen(f, g)
        if nxt == g:
            return g
        g = nxt
    raise ArithmeticError("Tschirnhausen iteration did not stabilise")
