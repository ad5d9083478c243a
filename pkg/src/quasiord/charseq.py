"""Lattice indices, characteristic sequences, formal orders and semigroups.

Exponent vectors are measured in the ``t``-grading, ``x_i = t_i**n``.  The
canonical generators ``r_0^i`` are ``n`` times the unit vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from .gadic import G_adic
from .polyring import ContractError, MPoly, UndefinedOrderError, YPoly, exp_lex


class ExponentVector(tuple):
    """Immutable vector of exact rationals with componentwise arithmetic.

    Unlike a plain tuple, ``+`` and ``-`` act componentwise and ``*`` scales.
    """

    def __new__(cls, components: Iterable = ()):
        return super().__new__(cls, (Fraction(c) for c in components))

    @classmethod
    def zero(cls, e: int) -> "ExponentVector":
        return cls([0] * e)

    @classmethod
    def unit(cls, i: int, e: int, scale=1) -> "ExponentVector":
        v = [0] * e
        v[i] = scale
        return cls(v)

    def __add__(self, other) -> "ExponentVector":
        _same_length(self, other)
        return ExponentVector(a + b for a, b in zip(self, other))

    def __sub__(self, other) -> "ExponentVector":
        _same_length(self, other)
        return ExponentVector(a - b for a, b in zip(self, other))

    def __neg__(self) -> "ExponentVector":
        return ExponentVector(-a for a in self)

    def __mul__(self, k) -> "ExponentVector":
        if isinstance(k, tuple):
            return NotImplemented
        return ExponentVector(a * k for a in self)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "ExponentVector":
        return ExponentVector(a / Fraction(k) for a in self)

    def __repr__(self) -> str:
        return "(" + ",".join(str(a) for a in self) + ")"

    @property
    def total(self) -> Fraction:
        return sum(self, Fraction(0))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self)

    def as_ints(self) -> Tuple[int, ...]:
        if not self.is_integral():
            raise ContractError(f"{self!r} is not integral")
        return tuple(int(a) for a in self)

    def leq(self, other) -> bool:
        """Componentwise ``<=``."""
        _same_length(self, other)
        return all(a <= b for a, b in zip(self, other))


def _same_length(a, b):
    if len(a) != len(b):
        raise ContractError(f"vectors of different lengths {len(a)} and {len(b)}")


def weak_less(a: Sequence, b: Sequence) -> bool:
    """``a <= b`` componentwise with at least one strict coordinate."""
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))


def strong_less(a: Sequence, b: Sequence) -> bool:
    """``a < b`` in every coordinate."""
    _same_length(a, b)
    return all(x < y for x, y in zip(a, b))


def vector_less(a: Sequence, b: Sequence, mode: str = "weak") -> bool:
    if mode == "weak":
        return weak_less(a, b)
    if mode == "strong":
        return strong_less(a, b)
    raise ValueError(f"unknown strictness mode {mode!r}")


def order_key(v: Sequence[Fraction]):
    """Sort key of the minimisation order used for formal orders.

    Smaller total degree wins; within one total degree the lexicographically
    greatest vector (``x1`` first) wins, mirroring the choice made by ``exp``.
    """
    return (sum(v, Fraction(0)), tuple(-a for a in v))


# -- lattices -----------------------------------------------------------------

def _int_det(rows: List[List[int]]) -> int:
    """Integer determinant by fraction-free elimination."""
    a = [list(r) for r in rows]
    size = len(a)
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def gcd_minors(n: int, vectors: Sequence[Sequence], e: Optional[int] = None) -> int:
    """gcd of the ``e x e`` minors of ``(n*I | v_1^T | ... | v_k^T)``."""
    vectors = [tuple(Fraction(c) for c in v) for v in vectors]
    if e is None:
        if not vectors:
            raise ContractError("e is required when no vectors are given")
        e = len(vectors[0])
    for v in vectors:
        if len(v) != e:
            raise ContractError(f"vector {v} does not have length {e}")
        if any(c.denominator != 1 for c in v):
            raise ContractError(f"vector {tuple(str(c) for c in v)} is not integral")
    columns = [tuple(n if i == j else 0 for i in range(e)) for j in range(e)]
    columns += [tuple(int(c) for c in v) for v in vectors]
    g = 0
    for cols in combinations(columns, e):
        det = _int_det([[col[i] for col in cols] for i in range(e)])
        g = math.gcd(g, det)
        if g == 1:
            break
    return g


def next_d(n: int, e: int, D_next: int) -> Optional[int]:
    """``D_next / n**(e-1)`` when it is an integer, else ``None``."""
    base = n ** (e - 1)
    if D_next % base:
        return None
    return D_next // base


def lattice_contains(n: int, vectors: Sequence[Sequence], v: Sequence, e: Optional[int] = None) -> bool:
    """Whether ``v`` lies in ``(nZ)^e + sum(Z * vectors)``."""
    v = tuple(Fraction(c) for c in v)
    if any(c.denominator != 1 for c in v):
        return False
    e = len(v) if e is None else e
    return gcd_minors(n, list(vectors) + [v], e) == gcd_minors(n, vectors, e)


# -- characteristic sequences ---------------------------------------------------

class InconsistencyError(ValueError):
    """An r/m conversion produced a negative exponent."""


def r_m_convert(direction: str, seq: Sequence[Sequence], e_seq: Sequence[int]) -> List[ExponentVector]:
    """Convert between characteristic exponents ``m`` and generators ``r``.

    ``r_1 = m_1`` and ``r_{k+1} = e_k r_k + m_{k+1} - m_k``.
    ``direction`` is ``"m->r"`` or ``"r->m"``.
    """
    seq = [ExponentVector(v) for v in seq]
    if len(e_seq) < len(seq) - 1:
        raise ContractError("need e_k for every step of the recursion")
    if not seq:
        return []
    if direction == "m->r":
        out = [seq[0]]
        for k in range(1, len(seq)):
            out.append(out[k - 1] * e_seq[k - 1] + seq[k] - seq[k - 1])
        return out
    if direction == "r->m":
        out = [seq[0]]
        for k in range(1, len(seq)):
            m = seq[k] - seq[k - 1] * e_seq[k - 1] + out[k - 1]
            if any(c < 0 for c in m):
                raise InconsistencyError(f"recovered m_{k + 1} = {m!r} has a negative coordinate")
            out.append(m)
        return out
    raise ValueError(f"unknown direction {direction!r}")


@dataclass(frozen=True)
class CharData:
    """Characteristic data ``n, D, d, e, r, m`` of a (candidate) branch."""

    n: int
    e: int
    D_seq: Tuple[int, ...]
    d_seq: Tuple[int, ...]
    e_seq: Tuple[int, ...]
    r_seq: Tuple[ExponentVector, ...]
    m_seq: Tuple[ExponentVector, ...]

    @property
    def h(self) -> int:
        return len(self.r_seq)

    @classmethod
    def from_r_sequence(cls, n: int, e: int, r_seq: Sequence[Sequence]) -> "CharData":
        r_seq = tuple(ExponentVector(r) for r in r_seq)
        D = [n ** e]
        for k in range(1, len(r_seq) + 1):
            D.append(gcd_minors(n, r_seq[:k], e))
        d = []
        for Dk in D:
            dk = next_d(n, e, Dk)
            if dk is None:
                raise ContractError(f"n^(e-1) does not divide D = {Dk}")
            d.append(dk)
        e_seq = tuple(a // b for a, b in zip(d, d[1:]))
        m_seq = tuple(r_m_convert("r->m", r_seq, e_seq))
        return cls(n, e, tuple(D), tuple(d), e_seq, r_seq, m_seq)

    @classmethod
    def from_m_sequence(cls, n: int, e: int, m_seq: Sequence[Sequence]) -> "CharData":
        m_seq = tuple(ExponentVector(m) for m in m_seq)
        D = [n ** e] + [gcd_minors(n, m_seq[:k], e) for k in range(1, len(m_seq) + 1)]
        d = [next_d(n, e, Dk) for Dk in D]
        if any(dk is None for dk in d):
            raise ContractError("lattice indices are not multiples of n^(e-1)")
        e_seq = tuple(a // b for a, b in zip(d, d[1:]))
        r_seq = tuple(r_m_convert("m->r", m_seq, e_seq))
        return cls(n, e, tuple(D), tuple(d), e_seq, r_seq, m_seq)

    def semigroup_generators(self) -> List[ExponentVector]:
        return [ExponentVector.unit(i, self.e, self.n) for i in range(self.e)] + list(self.r_seq)


# -- formal orders ------------------------------------------------------------

@dataclass(frozen=True)
class WeightSystem:
    """Weights ``(r_0^1, ..., r_0^e; r_1, ..., r_h)`` pairing with ``(gamma, theta)``."""

    r0_weights: Tuple[ExponentVector, ...]
    r_weights: Tuple[ExponentVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "r0_weights", tuple(ExponentVector(w) for w in self.r0_weights))
        object.__setattr__(self, "r_weights", tuple(ExponentVector(w) for w in self.r_weights))
        e = len(self.r0_weights)
        for i, w in enumerate(self.r0_weights):
            if len(w) != e or any(c for j, c in enumerate(w) if j != i):
                raise ContractError("r0 weights must be multiples of the unit vectors")
        for w in self.r_weights:
            if len(w) != e:
                raise ContractError("weight vector length mismatch")

    @property
    def e(self) -> int:
        return len(self.r0_weights)

    @classmethod
    def scaled(cls, n: int, e: int, r_seq: Sequence[Sequence], d: int) -> "WeightSystem":
        """``(r_0^1/d, ..., r_0^e/d, r_1/d, ..., r_k/d)``."""
        r0 = [ExponentVector.unit(i, e, Fraction(n, d)) for i in range(e)]
        return cls(tuple(r0), tuple(ExponentVector(r) / d for r in r_seq))

    def pair(self, gamma: Sequence[int], theta: Sequence[int]) -> ExponentVector:
        v = ExponentVector.zero(self.e)
        for g, w in zip(gamma, self.r0_weights):
            v = v + w * g
        for t, w in zip(theta, self.r_weights):
            v = v + w * t
        return v


@dataclass(frozen=True)
class FormalOrder:
    """Result of a formal-order minimisation.

    ``ties`` lists other support elements attaining the same value;
    ``incomparable`` lists competitors the winner is not componentwise below.
    """

    value: ExponentVector
    gamma: Tuple[int, ...]
    theta: Tuple[int, ...]
    coefficient: object
    ties: Tuple[Tuple[int, ...], ...] = ()
    incomparable: Tuple[Tuple[int, ...], ...] = ()
    candidates: Tuple[Tuple[Tuple[int, ...], ExponentVector], ...] = field(default=(), repr=False)

    @property
    def ambiguous(self) -> bool:
        return bool(self.ties)


def _expand_over(G: Sequence[YPoly], F: YPoly):
    if not G:
        if F.degree > 0:
            raise ContractError("empty G requires F free of y")
        return {(): F.coeff(0)} if F else {}
    return G_adic(F, G).entries


def formal_order(w: WeightSystem, G: Sequence[YPoly], F: YPoly) -> FormalOrder:
    """Minimum of ``<(gamma, theta), (r_0, r)>`` over the G-support of ``F``.

    ``gamma = exp(c_theta)`` for each coefficient ``c_theta`` of the G-adic
    expansion.  See :func:`order_key` for the order used on vector values.
    """
    if not F:
        raise UndefinedOrderError("formal order of the zero polynomial")
    if len(G) != len(w.r_weights):
        raise ContractError(f"{len(G)} bases but {len(w.r_weights)} weights")
    entries = _expand_over(G, F)
    cands = []
    for theta, c in entries.items():
        od = exp_lex(c)
        cands.append((theta, od, w.pair(od.exponent, theta)))
    cands.sort(key=lambda item: (order_key(item[2]), item[0]))
    theta0, od0, v0 = cands[0]
    ties = tuple(theta for theta, _, v in cands[1:] if v == v0)
    incomparable = tuple(theta for theta, _, v in cands[1:] if v != v0 and not v0.leq(v))
    return FormalOrder(
        v0, tuple(od0.exponent), tuple(theta0), od0.coefficient, ties, incomparable,
        tuple((theta, v) for theta, _, v in cands),
    )


@dataclass(frozen=True)
class InitialMonomial:
    """``M(c_theta0) * g_1**theta0_1 * ... * g_h**theta0_h``."""

    coefficient: object
    gamma: Tuple[int, ...]
    theta: Tuple[int, ...]

    def to_ypoly(self, G: Sequence[YPoly]) -> YPoly:
        term = YPoly.from_mpoly(MPoly.monomial(self.gamma, self.coefficient))
        for g, k in zip(G, self.theta):
            term = term * g ** k
        return term


def initial_monomial_G(w: WeightSystem, G: Sequence[YPoly], F: YPoly) -> InitialMonomial:
    fo = formal_order(w, G, F)
    return InitialMonomial(fo.coefficient, fo.gamma, fo.theta)


# -- semigroups ----------------------------------------------------------------

def semigroup_membership(gens: Sequence[Sequence], v: Sequence) -> bool:
    """Whether ``v`` is a nonnegative integer combination of ``gens``.

    Exhaustive search; every coefficient is bounded by ``v`` itself since all
    generators are nonnegative.
    """
    gens_i = []
    for g in gens:
        g = ExponentVector(g).as_ints()
        if any(c < 0 for c in g):
            raise ContractError("semigroup generators must be nonnegative")
        if any(g):
            gens_i.append(g)
    target = ExponentVector(v)
    if not target.is_integral():
        return False
    target = target.as_ints()
    gens_t = tuple(gens_i)

    @lru_cache(maxsize=None)
    def reach(i: int, rest: Tuple[int, ...]) -> bool:
        if not any(rest):
            return True
        if i == len(gens_t):
            return False
        g = gens_t[i]
        top = min(r // c for r, c in zip(rest, g) if c)
        for k in range(top, -1, -1):
            nxt = tuple(r - k * c for r, c in zip(rest, g))
            if reach(i + 1, nxt):
                return True
        return False

    if any(c < 0 for c in target):
        return False
    return reach(0, target)
