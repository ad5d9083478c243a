"""Independent ground truth built from explicit branch expansions.

A *branch* is a fractional power series ``y(t)`` with ``x_i = t_i**n``.  Its
minimal polynomial is the product of ``y - y(w t)`` over the conjugates
``w`` in ``U_n^e``; orders ``O(f, g)`` are read off ``g(t**n, y(t))``.
Nothing here uses approximate roots, so these routines can cross-check the
criterion.

For ``e = 1`` a classical Newton--Puiseux irreducibility test is also
provided.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .charseq import CharData, ExponentVector, lattice_contains
from .criterion import normalize_a1
from .polyring import ContractError, MPoly, YPoly, discriminant_y, exp_lex

ALLOWED_CONDUCTORS = (1, 2, 3, 4, 5, 6, 8, 12)


class TruncationError(ValueError):
    """The requested quantity is not determined by the truncated series."""


# -- cyclotomic fields --------------------------------------------------------

def _poly_divmod_int(num: List[int], den: List[int]) -> Tuple[List[int], List[int]]:
    """Divide integer polynomials (ascending coefficients, ``den`` monic)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        for j, b in enumerate(den):
            num[k + j] -= c * b
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> Tuple[int, ...]:
    """Ascending integer coefficients of the ``N``-th cyclotomic polynomial."""
    if N < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            poly, rem = _poly_divmod_int(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class CyclotomicElement:
    """Element of ``Q(zeta_N)`` stored as a polynomial in ``zeta`` of degree ``< phi(N)``."""

    __slots__ = ("N", "coeffs")

    def __init__(self, coeffs: Iterable, N: int = 1):
        if N not in ALLOWED_CONDUCTORS:
            raise ValueError(f"conductor {N} not supported (allowed: {ALLOWED_CONDUCTORS})")
        self.N = N
        self.coeffs = _reduce([Fraction(c) for c in coeffs], N)

    @classmethod
    def rational(cls, c, N: int = 1) -> "CyclotomicElement":
        return cls([c], N)

    @classmethod
    def root_of_unity(cls, k: int, N: int) -> "CyclotomicElement":
        k %= N
        return cls([0] * k + [1], N)

    def embed(self, M: int) -> "CyclotomicElement":
        """The same number inside ``Q(zeta_M)`` (``N`` must divide ``M``)."""
        if M % self.N:
            raise ValueError(f"Q(zeta_{self.N}) does not embed in Q(zeta_{M})")
        step = M // self.N
        out = [Fraction(0)] * (step * max(len(self.coeffs) - 1, 0) + 1)
        for k, c in enumerate(self.coeffs):
            out[k * step] += c
        return CyclotomicElement(out, M)

    def _binary(self, other):
        if not isinstance(other, CyclotomicElement):
            return self, CyclotomicElement.rational(other, self.N)
        if other.N == self.N:
            return self, other
        if self.is_rational():
            return CyclotomicElement.rational(self.to_rational(), other.N), other
        if other.is_rational():
            return self, CyclotomicElement.rational(other.to_rational(), self.N)
        M = math.lcm(self.N, other.N)
        return self.embed(M), other.embed(M)

    def __add__(self, other):
        if not isinstance(other, (CyclotomicElement, int, Fraction)):
            return NotImplemented
        a, b = self._binary(other)
        n = max(len(a.coeffs), len(b.coeffs))
        ca = list(a.coeffs) + [Fraction(0)] * (n - len(a.coeffs))
        cb = list(b.coeffs) + [Fraction(0)] * (n - len(b.coeffs))
        return CyclotomicElement([x + y for x, y in zip(ca, cb)], a.N)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement([-c for c in self.coeffs], self.N)

    def __sub__(self, other):
        if not isinstance(other, (CyclotomicElement, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement([c * other for c in self.coeffs], self.N)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        a, b = self._binary(other)
        out = [Fraction(0)] * max(len(a.coeffs) + len(b.coeffs) - 1, 0)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    out[i + j] += x * y
        return CyclotomicElement(out, a.N)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicElement":
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return CyclotomicElement.rational(1 / self.to_rational(), self.N)
        # extended Euclid in Q[z] against the cyclotomic polynomial
        r0, r1 = [Fraction(c) for c in cyclotomic_polynomial(self.N)], list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _qpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        # r0 is a nonzero constant
        return CyclotomicElement([c / r0[0] for c in s0], self.N)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement([c / other for c in self.coeffs], self.N)
        if isinstance(other, CyclotomicElement):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.to_rational() == other
        if isinstance(other, CyclotomicElement):
            if self.is_rational() and other.is_rational():
                return self.to_rational() == other.to_rational()
            return self.N == other.N and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.to_rational())
        return hash((self.N, self.coeffs))

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __repr__(self) -> str:
        if self.is_rational():
            return str(self.to_rational())
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*z{self.N}^{k}" if k else str(c))
        return " + ".join(parts)


def _reduce(coeffs: List[Fraction], N: int) -> Tuple[Fraction, ...]:
    mod = cyclotomic_polynomial(N)
    deg = len(mod) - 1
    coeffs = list(coeffs)
    for k in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[k]
        if c:
            for j, b in enumerate(mod):
                coeffs[k - deg + j] -= c * b
    coeffs = coeffs[:deg]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def _qpoly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _qpoly_divmod(a, b):
    a, b = _qpoly_trim(a), _qpoly_trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for j, x in enumerate(b):
            a[k + j] -= c * x
        a = _qpoly_trim(a)
    return q, a


def _qpoly_mul(a, b):
    out = [Fraction(0)] * max(len(a) + len(b) - 1, 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# -- branches -------------------------------------------------------------------

@dataclass(frozen=True)
class BranchSeries:
    """``y(t) = sum(c_p t**p)`` with ``x_i = t_i**n``.

    ``truncation=None`` means the finite sum is the exact root.  Otherwise
    only terms of total ``t``-degree ``< truncation`` are known.
    """

    terms: Tuple[Tuple[Tuple[int, ...], object], ...]
    n: int
    truncation: Optional[int] = None

    @classmethod
    def from_dict(cls, terms: Dict[Sequence[int], object], n: int,
                  truncation: Optional[int] = None) -> "BranchSeries":
        items = []
        for p, c in terms.items():
            if not isinstance(c, CyclotomicElement):
                c = Fraction(c)
            if c:
                items.append((tuple(int(a) for a in p), c))
        if not items:
            raise ContractError("a branch needs at least one nonzero term")
        e = len(items[0][0])
        if any(len(p) != e for p, _ in items):
            raise ContractError("inconsistent exponent lengths")
        if truncation is not None:
            items = [(p, c) for p, c in items if sum(p) < truncation]
            if not items:
                raise TruncationError(f"truncation {truncation} removes every term")
        return cls(tuple(sorted(items)), n, truncation)

    @property
    def e(self) -> int:
        return len(self.terms[0][0])

    @property
    def support(self) -> List[Tuple[int, ...]]:
        return [p for p, _ in self.terms]

    @property
    def order(self) -> int:
        """Lowest total ``t``-degree of a term."""
        return min(sum(p) for p in self.support)

    def as_mpoly(self) -> MPoly:
        return MPoly(dict(self.terms), self.e)

    def conjugate(self, k: Sequence[int]) -> MPoly:
        """``y(zeta^k1 t_1, ..., zeta^ke t_e)`` with ``zeta = exp(2 pi i / n)``."""
        out = {}
        for p, c in self.terms:
            phase = sum(a * b for a, b in zip(k, p)) % self.n
            out[p] = c * CyclotomicElement.root_of_unity(phase, self.n) if phase else c
        return MPoly(out, self.e)

    def orbit(self) -> List[Tuple[int, ...]]:
        """Representatives ``k in (Z/n)^e`` of the distinct conjugates."""
        seen = {}
        for k in itertools.product(range(self.n), repeat=self.e):
            key = tuple(sum(a * b for a, b in zip(k, p)) % self.n for p in self.support)
            seen.setdefault(key, k)
        return sorted(seen.values())


def default_truncation(n: int, top_exponent: int) -> int:
    """Default total-degree bound ``n * (|largest intended exponent| + n)``."""
    return n * (top_exponent + n)


def _to_rational_mpoly(p: MPoly) -> MPoly:
    out = {}
    for exp, c in p.terms.items():
        if isinstance(c, CyclotomicElement):
            if not c.is_rational():
                raise ArithmeticError(f"non-rational coefficient {c} in a conjugate product")
            c = c.to_rational()
        out[exp] = c
    return MPoly(out, p.nvars)


def _x_from_t(p: MPoly, n: int) -> MPoly:
    out = {}
    for exp, c in p.terms.items():
        if any(a % n for a in exp):
            raise ArithmeticError(f"exponent {exp} of a conjugate product is not divisible by {n}")
        out[tuple(a // n for a in exp)] = c
    return MPoly(out, p.nvars)


@dataclass(frozen=True)
class BranchPolynomial:
    """Minimal polynomial of a branch and, for truncated branches, its precision.

    ``precision[j]`` is the total ``t``-degree below which the coefficient of
    ``y**(n-j)`` is exact (``None`` when exact throughout).
    """

    polynomial: YPoly
    precision: Tuple[Optional[int], ...]


def branch_to_poly_detailed(branch: BranchSeries) -> BranchPolynomial:
    n, e = branch.n, branch.e
    orbit = branch.orbit()
    if len(orbit) != n:
        raise ContractError(f"branch has {len(orbit)} conjugates, expected n = {n}")
    T = branch.truncation
    ord_y = branch.order
    if T is not None and T <= ord_y:
        raise TruncationError(f"truncation {T} does not exceed the branch order {ord_y}")

    def bound(j: int) -> Optional[int]:
        return None if T is None or j == 0 else T + (j - 1) * ord_y

    # product of (y - conjugate), tracking ascending y-coefficients
    one = MPoly.constant(1, e)
    coeffs = [one]
    for k in orbit:
        c = branch.conjugate(k)
        nxt = [MPoly.zero(e)] * (len(coeffs) + 1)
        for j, a in enumerate(coeffs):
            nxt[j + 1] = nxt[j + 1] + a
            nxt[j] = nxt[j] - a * c
        if T is not None:
            # coefficient of y^(deg - j) is an elementary symmetric function of degree j
            deg = len(nxt) - 1
            nxt = [a if bound(deg - j) is None else a.truncate(bound(deg - j)) for j, a in enumerate(nxt)]
        coeffs = nxt
    out = [_x_from_t(_to_rational_mpoly(a), n) for a in coeffs]
    precision = tuple(bound(j) for j in range(n + 1))
    return BranchPolynomial(YPoly(out, e), precision)


def branch_to_poly(branch: BranchSeries) -> YPoly:
    """Monic minimal polynomial of the branch (truncated to its precision)."""
    return branch_to_poly_detailed(branch).polynomial


def _substitute(g: YPoly, branch: BranchSeries, limit: Optional[int]) -> MPoly:
    e, n = branch.e, branch.n
    y = branch.as_mpoly()
    total = MPoly.zero(e)
    power = MPoly.constant(1, e)
    for j, b in enumerate(g.coeffs):
        if j:
            power = power * y
            if limit is not None:
                power = power.truncate(limit)
        if b:
            term = b.scale_exponents(n) * power
            total = total + (term.truncate(limit) if limit is not None else term)
    return total


@dataclass(frozen=True)
class OracleOrder:
    value: Optional[ExponentVector]
    bound: Optional[int]


def order_of_detailed(g: YPoly, branch: BranchSeries) -> OracleOrder:
    """``exp(g(t**n, y(t)))`` together with the reliability bound used.

    ``value`` is ``None`` when the substitution vanishes identically for an
    exact branch (infinite order).
    """
    if not g:
        raise ContractError("order of the zero polynomial")
    if g.nvars != branch.e:
        raise ContractError("variable count mismatch")
    limit = None
    if branch.truncation is not None:
        limits = [branch.n * b.min_degree() + branch.truncation + (j - 1) * branch.order
                  for j, b in enumerate(g.coeffs) if j and b]
        limit = min(limits) if limits else None
    s = _substitute(g, branch, limit)
    if not s:
        if limit is None:
            return OracleOrder(None, None)
        raise TruncationError(f"no nonzero term below the truncation bound {limit}")
    od = exp_lex(s)
    if limit is not None and sum(od.exponent) >= limit:
        raise TruncationError(f"order {od.exponent} reaches the truncation bound {limit}")
    return OracleOrder(ExponentVector(od.exponent), limit)


def order_of(g: YPoly, branch: BranchSeries) -> Optional[ExponentVector]:
    """The order ``O(f, g)`` of ``g`` along the branch (``t``-grading)."""
    return order_of_detailed(g, branch).value


# -- characteristic data from a branch -------------------------------------------

def branch_differences(branch: BranchSeries):
    """``(k, y(t) - y(zeta^k t))`` for every conjugate other than ``y`` itself."""
    base = branch.as_mpoly()
    zero = tuple([0] * branch.e)
    for k in branch.orbit():
        if k == zero:
            continue
        yield k, base - branch.conjugate(k)


def is_quasi_ordinary_branch(branch: BranchSeries) -> bool:
    """Every difference of conjugates is a monomial times a unit.

    For a finite (exact) branch this means the support of each difference has
    a componentwise minimum.
    """
    if len(branch.orbit()) != branch.n:
        return False
    for _, diff in branch_differences(branch):
        supp = list(diff.terms)
        low = tuple(min(p[i] for p in supp) for i in range(branch.e))
        if low not in diff.terms:
            return False
    return True


def characteristic_exponents(branch: BranchSeries) -> List[ExponentVector]:
    """The exponents ``exp(y - z)`` over conjugates ``z != y``, sorted by degree."""
    exps = {exp_lex(diff).exponent for _, diff in branch_differences(branch)}
    return [ExponentVector(p) for p in sorted(exps, key=lambda p: (sum(p), p))]


def branch_chardata(branch: BranchSeries) -> CharData:
    return CharData.from_m_sequence(branch.n, branch.e, characteristic_exponents(branch))


def order_from_contact(cd: CharData, m: int, c: Sequence, rule: str = "ordering") -> ExponentVector:
    """Order of a degree-``m`` branch ``g`` against ``f`` from their contact ``c``.

    With ``q`` the selected index::

        O(f, g) = (r_q d_q + (n c - m_q) d_{q+1}) * m / n

    and ``O(f, g) = n m c`` when no index is selected.  Summing
    ``exp(y_i - z)`` over the roots ``y_i`` of ``f`` shows that ``q`` counts
    the characteristic exponents ``m_k <= n c``; that is ``rule="ordering"``.
    ``rule="lattice"`` instead takes the least ``q`` with ``n c`` in
    ``M_q = (nZ)^e + m_1 Z + ... + m_q Z``.  The two agree whenever ``n c``
    is not below ``m_q``, but the lattice rule misfires when ``n c`` lies in
    ``M_q`` and is smaller than ``m_q``.
    """
    n = cd.n
    nc = ExponentVector(c) * n
    if rule == "ordering":
        q = sum(1 for mk in cd.m_seq if mk.leq(nc))
    elif rule == "lattice":
        q = next((k for k in range(1, cd.h + 1) if lattice_contains(n, cd.m_seq[:k], nc, cd.e)), 0)
    else:
        raise ValueError(f"unknown rule {rule!r}")
    if not q:
        return nc * m
    r_q, m_q = cd.r_seq[q - 1], cd.m_seq[q - 1]
    return (r_q * cd.d_seq[q - 1] + (nc - m_q) * cd.d_seq[q]) * Fraction(m, n)


def contact(branch_f: BranchSeries, branch_g: BranchSeries) -> ExponentVector:
    """Maximal contact between ``branch_g`` and the conjugates of ``branch_f``.

    The contact of two parametrisations with ramification ``p`` and ``q`` is
    ``exp(Y(t**q) - Z(t**p)) / (p q)``.  Conjugates are compared in the
    minimisation order of :func:`quasiord.charseq.order_key`.
    """
    from .charseq import order_key

    p, q = branch_f.n, branch_g.n
    Z = branch_g.as_mpoly().scale_exponents(p)
    best = None
    for k in branch_f.orbit():
        diff = branch_f.conjugate(k).scale_exponents(q) - Z
        if not diff:
            raise ContractError("identical branches have infinite contact")
        v = ExponentVector(exp_lex(diff).exponent) / (p * q)
        if best is None or order_key(v) > order_key(best):
            best = v
    return best


# -- classical e = 1 test ------------------------------------------------------

def _binomial_row(base: Fraction, j: int) -> List[Fraction]:
    """Coefficients of ``(base + Y)**j`` in ascending powers of ``Y``."""
    return [math.comb(j, s) * base ** (j - s) for s in range(j + 1)]


def newton_puiseux_irreducible_e1(f: YPoly, max_steps: int = 500) -> bool:
    """Classical irreducibility test for plane curve germs (``e = 1``).

    Runs the Newton--Puiseux recursion on the branch cluster at ``Y = 0``:
    a single edge of slope ``m/q`` whose residual polynomial is a pure power
    ``c (T - a)**g`` is followed by the substitution
    ``x = a**v X**q, y = X**m (a**u + Y)`` with ``u q - v m = 1``.  Any
    second edge or second residual root proves reducibility.  The residual
    root of a pure power of a rational polynomial is rational, so all the
    arithmetic stays in ``Q``.
    """
    if f.nvars != 1:
        raise ContractError("the classical test needs e = 1")
    if not f.is_monic():
        raise ContractError("f must be monic")
    n = f.degree
    if n < 1:
        raise ContractError("f must have positive degree")
    if n == 1:
        return True
    fn, _ = normalize_a1(f)
    for k in range(1, n + 1):
        if fn.a(k).constant_term():
            raise ContractError("f(0, y) is not y^n after normalisation")
    if not discriminant_y(fn):
        return False
    F: Dict[Tuple[int, int], Fraction] = {}
    for j, c in enumerate(fn.coeffs):
        for (i,), a in c.terms.items():
            F[(i, j)] = a
    l = n
    for _ in range(max_steps):
        if l == 1:
            return True
        col0 = [i for (i, j) in F if j == 0]
        if not col0:
            return False
        v0 = min(col0)
        for (i, j) in F:
            if j < l and i * l < v0 * (l - j):
                return False
        g = math.gcd(v0, l)
        m, q = v0 // g, l // g
        c = [F.get((s * m, l - s * q), Fraction(0)) for s in range(g + 1)]
        a = -c[1] / (g * c[0])
        for s in range(g + 1):
            if c[s] != c[0] * math.comb(g, s) * (-a) ** s:
                return False
        if g == 1:
            return True
        # Bezout u q - v m = 1 with u >= 0
        u = pow(q, -1, m) if m > 1 else 1
        v = (u * q - 1) // m
        base = a ** u
        shift = m * l
        nxt: Dict[Tuple[int, int], Fraction] = {}
        for (i, j), coef in F.items():
            xi = q * i + m * j - shift
            if xi < 0:
                raise ArithmeticError("point below the Newton polygon edge")
            scale = coef * a ** (v * i)
            for s, b in enumerate(_binomial_row(base, j)):
                if b:
                    key = (xi, s)
                    nxt[key] = nxt.get(key, Fraction(0)) + scale * b
        F = {key: val for key, val in nxt.items() if val}
        l = g
    raise ArithmeticError("Newton-Puiseux recursion did not terminate")


def binomial_coefficient(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (alpha - i) / (i + 1)
    return out


def binomial_branch(n: int, lead: Sequence[int], step: Sequence[int], power,
                    truncation: int, coefficient=1) -> BranchSeries:
    """Truncated ``c * t**lead * (1 + t**step)**power`` as a branch."""
    power = Fraction(power)
    lead, step = tuple(lead), tuple(step)
    if sum(step) <= 0:
        raise ContractError("the step exponent must have positive degree")
    terms = {}
    k = 0
    while sum(lead) + k * sum(step) < truncation:
        c = Fraction(coefficient) * binomial_coefficient(power, k)
        if c:
            terms[tuple(a + k * b for a, b in zip(lead, step))] = c
        k += 1
    return BranchSeries.from_dict(terms, n, truncation)


# -- branch-spec text format -------------------------------------------------------

def parse_branch_spec(text: str, truncation: Optional[int] = None) -> BranchSeries:
    """Read a branch from text.

    Lines are ``n = N``, optionally ``truncation = T``, and one term per line
    as ``<coefficient> <p_1> ... <p_e>``; ``#`` starts a comment.  The
    ``truncation`` argument overrides the file.
    """
    n = None
    trunc = None
    terms: Dict[Tuple[int, ...], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, val = (s.strip() for s in line.partition("="))
            try:
                value = int(val)
            except ValueError:
                raise ContractError(f"line {lineno}: expected an integer after '='") from None
            if key == "n":
                n = value
            elif key == "truncation":
                trunc = value
            else:
                raise ContractError(f"line {lineno}: unknown key {key!r}")
            continue
        fields = line.split()
        try:
            c = Fraction(fields[0])
            p = tuple(int(a) for a in fields[1:])
        except (ValueError, ZeroDivisionError):
            raise ContractError(f"line {lineno}: cannot read term {line!r}") from None
        if not p or any(a < 0 for a in p):
            raise ContractError(f"line {lineno}: exponents must be nonnegative integers")
        terms[p] = terms.get(p, Fraction(0)) + c
    if n is None or n < 1:
        raise ContractError("branch spec needs a line 'n = N' with N >= 1")
    if truncation is not None:
        trunc = truncation
    return BranchSeries.from_dict(terms, n, trunc)


def format_branch_spec(branch: BranchSeries) -> str:
    lines = [f"n = {branch.n}"]
    if branch.truncation is not None:
        lines.append(f"truncation = {branch.truncation}")
    for p, c in branch.terms:
        if isinstance(c, CyclotomicElement):
            c = c.to_rational()
        lines.append(" ".join([str(c)] + [str(a) for a in p]))
    return "\n".join(lines) + "\n"


# -- corpus generation ---------------------------------------------------------

def random_branch(rng, n: int, e: int, max_terms: int = 4, max_step: int = 4,
                  attempts: int = 2000, min_h: int = 1) -> BranchSeries:
    """A random exact quasi-ordinary branch with ``n`` conjugates.

    Exponents are built as an increasing chain so every difference of
    conjugates has a componentwise smallest term; no exponent lies in
    ``(nZ)^e``, so the minimal polynomial has no ``y**(n-1)`` term.
    ``min_h`` asks for at least that many characteristic exponents.
    """
    for _ in range(attempts):
        k = rng.randint(1, max_terms)
        p = tuple(rng.randint(0, max_step) for _ in range(e))
        if not any(p):
            p = tuple(1 if i == 0 else a for i, a in enumerate(p))
        exps = []
        for _ in range(k):
            if not all(a % n == 0 for a in p):
                exps.append(p)
            step = tuple(rng.randint(0, max_step) for _ in range(e))
            if not any(step):
                step = tuple(1 if i == rng.randrange(e) else 0 for i in range(e)) if e > 1 else (1,)
                if not any(step):
                    step = (1,) + (0,) * (e - 1)
            p = tuple(a + b for a, b in zip(p, step))
        if not exps:
            continue
        terms = {q: Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2])) for q in exps}
        b = BranchSeries.from_dict(terms, n)
        if len(b.orbit()) == n and is_quasi_ordinary_branch(b):
            if len(characteristic_exponents(b)) >= min_h:
                return b
    raise ArithmeticError(f"no quasi-ordinary branch found for n={n}, e={e}")
