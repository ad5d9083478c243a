"""Exact polynomial arithmetic.

Two ring types are provided:

* :class:`MPoly` -- sparse multivariate polynomials in ``x1..xe``, a finite
  truncation of an element of ``K[[x1, ..., xe]]``.
* :class:`YPoly` -- polynomials in ``y`` whose coefficients are ``MPoly``.

Coefficients are :class:`fractions.Fraction` by default.  Any other exact
coefficient type supporting ``+``, ``-``, ``*``, ``/``, ``==`` and truth
testing (for instance the cyclotomic elements of :mod:`quasiord.oracle`)
can be stored as well; integers are promoted to ``Fraction``.

All values are treated as immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from fractions import Fraction
import operator
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]


class DimensionError(ValueError):
    """Operands live in polynomial rings with different variable counts."""


class UndefinedOrderError(ValueError):
    """An order (exp, inco, M, formal order) was requested for zero."""


class ContractError(ValueError):
    """A documented precondition of an operation was violated."""


def _coerce(c):
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, int):
        return Fraction(c)
    return c


class MPoly:
    """Sparse polynomial in ``nvars`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, terms: Optional[Dict[Exponent, object]] = None, nvars: int = 1):
        if nvars < 1:
            raise DimensionError("at least one variable is required")
        clean: Dict[Exponent, object] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(a) for a in exp)
            if len(exp) != nvars:
                raise DimensionError(f"exponent {exp} does not have length {nvars}")
            if any(a < 0 for a in exp):
                raise ValueError(f"negative exponent {exp}")
            c = _coerce(c)
            if c:
                clean[exp] = c
        self.nvars = nvars
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exponent, object], nvars: int) -> "MPoly":
        """Wrap already-validated terms (nonzero coefficients, int tuples)."""
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "MPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "MPoly":
        return cls({tuple(exp): c}, len(exp))

    @classmethod
    def var(cls, i: int, nvars: int) -> "MPoly":
        """The variable ``x_{i+1}`` (zero-based index ``i``)."""
        exp = [0] * nvars
        exp[i] = 1
        return cls({tuple(exp): 1}, nvars)

    # -- basic queries ----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(exp) for exp in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(exp) for exp in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise UndefinedOrderError("zero polynomial has no order")
        return min(sum(exp) for exp in self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, object]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MPoly({format_mpoly(self)!r}, nvars={self.nvars})"

    def __str__(self) -> str:
        return format_mpoly(self)

    # -- arithmetic -------------------------------------------------------
    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"cannot combine {self.nvars}- and {other.nvars}-variable polynomials")
            return other
        if isinstance(other, YPoly):
            return NotImplemented
        return MPoly.constant(other, self.nvars)

    def __add__(self, other) -> "MPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp)
            s = c if s is None else s + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MPoly._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({exp: -c for exp, c in self.terms.items()}, self.nvars)

    def __sub__(self, other) -> "MPoly":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            if isinstance(other, YPoly):
                return NotImplemented
            other = _coerce(other)
            if not other:
                return MPoly.zero(self.nvars)
            return MPoly({exp: c * other for exp, c in self.terms.items()}, self.nvars)
        other = self._lift(other)
        if not self.terms or not other.terms:
            return MPoly.zero(self.nvars)
        if _all_fractions(self.terms) and _all_fractions(other.terms):
            return _mul_rational(self, other)
        out: Dict[Exponent, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(map(operator.add, e1, e2))
                s = out.get(exp)
                out[exp] = c1 * c2 if s is None else s + c1 * c2
        return MPoly(out, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            return self.exact_div(other)
        other = _coerce(other)
        return MPoly({exp: c / other for exp, c in self.terms.items()}, self.nvars)

    def __pow__(self, k: int) -> "MPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def leading_lex(self) -> Tuple[Exponent, object]:
        """Lexicographically greatest term (x1 > x2 > ...)."""
        if not self.terms:
            raise UndefinedOrderError("zero polynomial has no leading term")
        exp = max(self.terms)
        return exp, self.terms[exp]

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        other = self._lift(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        lexp, lc = other.leading_lex()
        quotient: Dict[Exponent, object] = {}
        rem = self
        while rem:
            rexp, rc = rem.leading_lex()
            qexp = tuple(a - b for a, b in zip(rexp, lexp))
            if any(a < 0 for a in qexp):
                raise ArithmeticError("inexact polynomial division")
            qc = rc / lc
            quotient[qexp] = qc
            rem = rem - other * MPoly({qexp: qc}, self.nvars)
        return MPoly(quotient, self.nvars)

    def map_coefficients(self, fn) -> "MPoly":
        return MPoly({exp: fn(c) for exp, c in self.terms.items()}, self.nvars)

    def scale_exponents(self, k: int) -> "MPoly":
        """Substitute ``x_i -> x_i**k`` for every variable."""
        return MPoly({tuple(a * k for a in exp): c for exp, c in self.terms.items()}, self.nvars)

    def truncate(self, bound: int) -> "MPoly":
        """Drop every term of total degree ``>= bound``."""
        return MPoly({exp: c for exp, c in self.terms.items() if sum(exp) < bound}, self.nvars)


def _all_fractions(terms) -> bool:
    return all(type(c) is Fraction for c in terms.values())


def _mul_rational(a: MPoly, b: MPoly) -> MPoly:
    """Product over Q using integer arithmetic on common denominators."""
    da = math.lcm(*(c.denominator for c in a.terms.values()))
    db = math.lcm(*(c.denominator for c in b.terms.values()))
    ia = [(e, c.numerator * (da // c.denominator)) for e, c in a.terms.items()]
    ib = [(e, c.numerator * (db // c.denominator)) for e, c in b.terms.items()]
    acc: Dict[Exponent, int] = {}
    get = acc.get
    add = operator.add
    for e1, c1 in ia:
        for e2, c2 in ib:
            exp = tuple(map(add, e1, e2))
            acc[exp] = get(exp, 0) + c1 * c2
    den = da * db
    return MPoly._raw({e: Fraction(v, den) for e, v in acc.items() if v}, a.nvars)


@dataclass(frozen=True)
class OrderData:
    """Initial exponent and coefficient of a nonzero polynomial."""

    exponent: Exponent
    coefficient: object

    @property
    def monomial(self) -> MPoly:
        return MPoly.monomial(self.exponent, self.coefficient)


def initial_form(p: MPoly) -> MPoly:
    """Homogeneous component of minimal total degree."""
    d = p.min_degree()
    return MPoly({exp: c for exp, c in p.terms.items() if sum(exp) == d}, p.nvars)


def exp_lex(p: MPoly) -> OrderData:
    """``exp``/``inco`` of ``p``: lex-greatest term of the initial form.

    The lexicographic order gives priority to ``x1``, then ``x2``, and so on.

    >>> x1, x2 = MPoly.var(0, 2), MPoly.var(1, 2)
    >>> exp_lex(x1 + x2).exponent
    (1, 0)
    """
    if not p:
        raise UndefinedOrderError("exp of the zero polynomial is undefined")
    d = p.min_degree()
    exp = max(e for e in p.terms if sum(e) == d)
    return OrderData(exp, p.terms[exp])


def monomial_unit_split(p: MPoly) -> Optional[Tuple[Exponent, MPoly]]:
    """Write ``p = x**N * u`` with ``u(0) != 0`` if possible.

    ``N`` is the componentwise minimum of the support.  Returns ``None`` when
    the cofactor has zero constant term, i.e. ``p`` is not a monomial times a
    unit of the power-series ring.
    """
    if not p:
        raise UndefinedOrderError("the zero polynomial has no monomial factor")
    N = tuple(min(exp[i] for exp in p.terms) for i in range(p.nvars))
    u = MPoly({tuple(a - b for a, b in zip(exp, N)): c for exp, c in p.terms.items()}, p.nvars)
    if not u.constant_term():
        return None
    return N, u


class YPoly:
    """Polynomial in ``y`` with :class:`MPoly` coefficients.

    ``coeffs[j]`` is the coefficient of ``y**j`` (ascending order); trailing
    zeros are removed so the zero polynomial has ``coeffs == ()`` and degree
    ``-1``.
    """

    __slots__ = ("nvars", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable, nvars: int):
        cs = []
        for c in coeffs:
            if not isinstance(c, MPoly):
                c = MPoly.constant(c, nvars)
            elif c.nvars != nvars:
                raise DimensionError(f"coefficient in {c.nvars} variables, expected {nvars}")
            cs.append(c)
        while cs and not cs[-1]:
            cs.pop()
        self.nvars = nvars
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def zero(cls, nvars: int) -> "YPoly":
        return cls((), nvars)

    @classmethod
    def one(cls, nvars: int) -> "YPoly":
        return cls((MPoly.constant(1, nvars),), nvars)

    @classmethod
    def y(cls, nvars: int) -> "YPoly":
        return cls((MPoly.zero(nvars), MPoly.constant(1, nvars)), nvars)

    @classmethod
    def from_mpoly(cls, c: MPoly) -> "YPoly":
        return cls((c,), c.nvars)

    @classmethod
    def from_descending(cls, coeffs: Sequence, nvars: int) -> "YPoly":
        """Build from ``[c_n, ..., c_0]`` (coefficient of ``y**n`` first)."""
        return cls(list(coeffs)[::-1], nvars)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, j: int) -> MPoly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return MPoly.zero(self.nvars)

    def a(self, k: int) -> MPoly:
        """Coefficient ``a_k`` of ``y**(n-k)`` in ``y^n + a_1 y^(n-1) + ...``."""
        return self.coeff(self.degree - k)

    def descending(self) -> Tuple[MPoly, ...]:
        return self.coeffs[::-1]

    @property
    def leading(self) -> MPoly:
        if not self.coeffs:
            raise UndefinedOrderError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == MPoly.constant(1, self.nvars)

    def is_constant(self) -> bool:
        return self.degree <= 0

    def __eq__(self, other) -> bool:
        if isinstance(other, YPoly):
            return self.nvars == other.nvars and self.coeffs == other.coeffs
        if isinstance(other, (MPoly, int, Fraction)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"YPoly({format_ypoly(self)!r}, nvars={self.nvars})"

    def __str__(self) -> str:
        return format_ypoly(self)

    def _lift(self, other) -> "YPoly":
        if isinstance(other, YPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"cannot combine {self.nvars}- and {other.nvars}-variable polynomials")
            return other
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise DimensionError(f"cannot combine {self.nvars}- and {other.nvars}-variable polynomials")
            return YPoly((other,), self.nvars)
        return YPoly((MPoly.constant(other, self.nvars),), self.nvars)

    def __add__(self, other) -> "YPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return YPoly([self.coeff(j) + other.coeff(j) for j in range(n)], self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "YPoly":
        return YPoly([-c for c in self.coeffs], self.nvars)

    def __sub__(self, other) -> "YPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "YPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "YPoly":
        if not isinstance(other, (YPoly, MPoly)):
            other = _coerce(other)
            return YPoly([c * other for c in self.coeffs], self.nvars)
        other = self._lift(other)
        if not self or not other:
            return YPoly.zero(self.nvars)
        out = [MPoly.zero(self.nvars) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return YPoly(out, self.nvars)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "YPoly":
        if isinstance(other, (YPoly, MPoly)):
            raise TypeError("use divmod_y for polynomial division")
        other = _coerce(other)
        return YPoly([c / other for c in self.coeffs], self.nvars)

    def __pow__(self, k: int) -> "YPoly":
        if k < 0:
            raise ValueError("negative power")
        result = YPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> "YPoly":
        return YPoly([c * j for j, c in enumerate(self.coeffs)][1:], self.nvars)

    def shift(self, s: MPoly) -> "YPoly":
        """Return ``self(y + s)`` by Horner's rule."""
        lin = YPoly((s, MPoly.constant(1, self.nvars)), self.nvars)
        result = YPoly.zero(self.nvars)
        for c in reversed(self.coeffs):
            result = result * lin + c
        return result

    def compose(self, g: "YPoly") -> "YPoly":
        """Return ``self(g(y))``."""
        result = YPoly.zero(self.nvars)
        for c in reversed(self.coeffs):
            result = result * g + c
        return result

    def map_coefficients(self, fn) -> "YPoly":
        return YPoly([fn(c) for c in self.coeffs], self.nvars)


def divmod_y(f: YPoly, g: YPoly) -> Tuple[YPoly, YPoly]:
    """Euclidean division ``f = g*q + r`` with ``deg r < deg g``; ``g`` monic."""
    if not g.is_monic():
        raise ContractError("divisor must be monic")
    if g.degree < 1:
        raise ContractError("divisor must have positive y-degree")
    if f.nvars != g.nvars:
        raise DimensionError("mismatched variable counts")
    m = g.degree
    rem = list(f.coeffs)
    if len(rem) <= m:
        return YPoly.zero(f.nvars), f
    quot = [MPoly.zero(f.nvars)] * (len(rem) - m)
    for top in range(len(rem) - 1, m - 1, -1):
        c = rem[top]
        if not c:
            continue
        shift = top - m
        quot[shift] = c
        for j, b in enumerate(g.coeffs):
            if b:
                rem[shift + j] = rem[shift + j] - c * b
    return YPoly(quot, f.nvars), YPoly(rem[:m], f.nvars)


def sylvester_matrix(f: YPoly, g: YPoly) -> list:
    """Sylvester matrix of ``f`` and ``g`` with respect to ``y``."""
    n, m = f.degree, g.degree
    if n < 0 or m < 0:
        raise ContractError("Sylvester matrix of a zero polynomial")
    size = n + m
    zero = MPoly.zero(f.nvars)
    fd, gd = f.descending(), g.descending()
    rows = []
    for i in range(m):
        rows.append([zero] * i + list(fd) + [zero] * (size - n - 1 - i))
    for i in range(n):
        rows.append([zero] * i + list(gd) + [zero] * (size - m - 1 - i))
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[MPoly]], nvars: int) -> MPoly:
    """Fraction-free Gaussian elimination (Bareiss) over ``Q[x]``.

    Every division is exact; zero pivots are handled by row exchange.
    """
    a = [list(row) for row in matrix]
    size = len(a)
    if size == 0:
        return MPoly.constant(1, nvars)
    sign = 1
    prev = MPoly.constant(1, nvars)
    for k in range(size - 1):
        if not a[k][k]:
            # sparsest nonzero pivot keeps intermediate entries small
            candidates = [i for i in range(k + 1, size) if a[i][k]]
            if not candidates:
                return MPoly.zero(nvars)
            i = min(candidates, key=lambda r: len(a[r][k]))
            a[k], a[i] = a[i], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = pivot * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev) if num else num
            a[i][k] = MPoly.zero(nvars)
        prev = pivot
    det = a[size - 1][size - 1]
    return -det if sign < 0 else det


def resultant_y(f: YPoly, g: YPoly) -> MPoly:
    return bareiss_determinant(sylvester_matrix(f, g), f.nvars)


def discriminant_y(f: YPoly) -> MPoly:
    """``Res_y(f, df/dy)`` exactly as produced by Bareiss elimination.

    No sign or leading-coefficient normalisation is applied; for monic ``f``
    of degree ``n`` this is ``(-1)**(n(n-1)/2)`` times the classical
    discriminant.
    """
    if f.degree < 1:
        raise ContractError("discriminant needs positive y-degree")
    if f.degree == 1:
        return MPoly.constant(1, f.nvars)
    return resultant_y(f, f.derivative())


# -- printing ---------------------------------------------------------------

def _format_coefficient(c) -> str:
    return str(c)


def _monomial_key(exp: Exponent):
    # ascending total degree, then lex-descending (x1 first)
    return (sum(exp), tuple(-a for a in exp))


def _monomial_str(exp: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, exp):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def _signed_terms(p: YPoly | MPoly, names: Sequence[str]):
    if isinstance(p, MPoly):
        p = YPoly.from_mpoly(p)
    for j in range(p.degree, -1, -1):
        c = p.coeffs[j]
        ypart = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
        for exp in sorted(c.terms, key=_monomial_key):
            coef = c.terms[exp]
            mono = "*".join(s for s in (_monomial_str(exp, names), ypart) if s)
            if isinstance(coef, Fraction):
                negative = coef < 0
                mag = -coef if negative else coef
                if mono and mag == 1:
                    body = mono
                else:
                    body = str(mag) + ("*" + mono if mono else "")
            else:
                negative = False
                body = f"({coef})" + ("*" + mono if mono else "")
            yield negative, body


def format_ypoly(p: YPoly | MPoly, names: Optional[Sequence[str]] = None) -> str:
    """Render in the CLI grammar, e.g. ``y^4 - x1*x2``."""
    if names is None:
        names = [f"x{i + 1}" for i in range(p.nvars)]
    out = []
    for negative, body in _signed_terms(p, names):
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out) if out else "0"


def format_mpoly(p: MPoly, names: Optional[Sequence[str]] = None) -> str:
    return format_ypoly(p, names)
