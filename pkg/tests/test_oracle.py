import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiord import oracle
from quasiord.charseq import ExponentVector
from quasiord.criterion import analyze
from quasiord.gadic import approximate_root
from quasiord.oracle import (
    BranchSeries,
    CyclotomicElement,
    TruncationError,
    binomial_branch,
    branch_to_poly,
    newton_puiseux_irreducible_e1,
    order_from_contact,
    order_of,
)
from quasiord.polyring import ContractError, MPoly, YPoly

from conftest import poly
from quasiord.cli import parse_poly

V = ExponentVector


class TestCyclotomic:
    @pytest.mark.parametrize("N", oracle.ALLOWED_CONDUCTORS)
    def test_polynomial_matches_sympy(self, N):
        z = sympy.symbols("z")
        expected = sympy.Poly(sympy.cyclotomic_poly(N, z), z).all_coeffs()[::-1]
        assert list(oracle.cyclotomic_polynomial(N)) == [int(c) for c in expected]

    @pytest.mark.parametrize("N", oracle.ALLOWED_CONDUCTORS)
    def test_roots_of_unity(self, N):
        z = CyclotomicElement.root_of_unity(1, N)
        acc = CyclotomicElement.rational(1, N)
        for _ in range(N):
            acc = acc * z
        assert acc == 1
        # sum of all N-th roots of unity vanishes for N > 1
        total = sum((CyclotomicElement.root_of_unity(k, N) for k in range(N)), CyclotomicElement.rational(0, N))
        assert total == (1 if N == 1 else 0)

    def test_unsupported_conductor(self):
        with pytest.raises(ValueError):
            CyclotomicElement([1], 7)

    @given(st.lists(st.integers(-4, 4), min_size=1, max_size=4).filter(any))
    def test_inverse(self, coeffs):
        a = CyclotomicElement(coeffs, 8)
        if a:
            assert a * a.inverse() == 1

    def test_degree_invariant(self):
        a = CyclotomicElement([1, 2, 3, 4, 5, 6, 7], 12)
        assert len(a.coeffs) <= 4


class TestBranchToPoly:
    def test_cusp(self):
        b = BranchSeries.from_dict({(3,): 1}, 2)
        assert branch_to_poly(b) == poly("y^2 - x1^3", 1)

    def test_irreducible_octic_up_to_precision(self, irr_octic):
        b = binomial_branch(8, (2, 2), (4, 0), Fraction(1, 4), 40)
        bp = oracle.branch_to_poly_detailed(b)
        for j, bound in enumerate(bp.precision):
            got = bp.polynomial.coeff(8 - j)
            want = irr_octic.coeff(8 - j)
            if bound is None:
                assert got == want
            else:
                assert got == want.truncate(-(-bound // 8))

    def test_binomial_series_coefficients(self):
        b = binomial_branch(8, (2, 2), (4, 0), Fraction(1, 4), 20)
        assert dict(b.terms) == {(2, 2): 1, (6, 2): Fraction(1, 4), (10, 2): Fraction(-3, 32),
                                 (14, 2): Fraction(7, 128)}

    def test_quartic_branch(self):
        f = branch_to_poly(BranchSeries.from_dict({(6,): 1, (7,): 1}, 4))
        assert f.degree == 4 and f.is_monic()
        assert analyze(f).irreducible

    def test_orbit_contract(self):
        with pytest.raises(ContractError):
            branch_to_poly(BranchSeries.from_dict({(4,): 1}, 4))

    def test_truncation_too_low(self):
        with pytest.raises(TruncationError):
            branch_to_poly(BranchSeries.from_dict({(2, 2): 1}, 8, truncation=4))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10 ** 6), st.sampled_from([2, 3, 4, 6]), st.integers(1, 2))
    def test_coefficients_are_rational(self, seed, n, e):
        b = oracle.random_branch(random.Random(seed), n, e, max_terms=3)
        f = branch_to_poly(b)
        assert f.is_monic() and f.degree == n
        for c in f.coeffs:
            assert all(isinstance(v, Fraction) for v in c.terms.values())


class TestOrderOf:
    branch = binomial_branch(8, (2, 2), (4, 0), Fraction(1, 4), 60)

    def test_y(self):
        assert order_of(poly("y"), self.branch) == V((2, 2))

    def test_g2(self):
        assert order_of(poly("y^4 - x1*x2"), self.branch) == V((12, 8))

    def test_constant(self):
        assert order_of(YPoly.one(2), self.branch) == V((0, 0))

    def test_f_itself_is_beyond_truncation(self, irr_octic):
        with pytest.raises(TruncationError):
            order_of(irr_octic, self.branch)

    def test_exact_branch_infinite_order(self):
        b = BranchSeries.from_dict({(2, 2): 1, (6, 2): 1}, 8)
        assert order_of(branch_to_poly(b), b) is None

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(["y", "y^2 - x1", "y^4 - x1*x2", "y + x2", "y^3 - x1*x2*y"]),
           st.sampled_from(["y", "y^4 - x1*x2", "x1 + x2", "y^2 + x1*x2"]))
    def test_additive(self, a, b):
        ga, gb = (parse_poly(s, 2, require_monic=False) for s in (a, b))
        oa, ob = order_of(ga, self.branch), order_of(gb, self.branch)
        assert order_of(ga * gb, self.branch) == oa + ob


def _cross_differences_quasi_ordinary(fb, gb):
    """Every root of ``f`` minus every root of ``g`` is a monomial times a unit."""
    p, q = fb.n, gb.n
    for k in fb.orbit():
        Y = fb.conjugate(k).scale_exponents(q)
        for j in gb.orbit():
            diff = Y - gb.conjugate(j).scale_exponents(p)
            if not diff:
                return False
            low = tuple(min(e[i] for e in diff.terms) for i in range(diff.nvars))
            if low not in diff.terms:
                return False
    return True


class TestContact:
    cd = analyze(poly("y^8 - 2*x1*x2*y^4 + x1^2*x2^2 - x1^3*x2^2")).char_data

    def test_g2(self):
        assert order_from_contact(self.cd, 4, V((6, 2)) / 8) == V((12, 8))

    def test_g1(self):
        assert order_from_contact(self.cd, 1, V((2, 2)) / 8) == V((2, 2))

    def test_below_first_exponent(self):
        c = V((1, 1)) / 8
        assert order_from_contact(self.cd, 1, c) == c * 8

    def test_against_series(self):
        # g = y - x1^(1/4)x2^(1/4) as a degree-4 polynomial: y^4 - x1*x2
        f_branch = binomial_branch(8, (2, 2), (4, 0), Fraction(1, 4), 60)
        g_branch = BranchSeries.from_dict({(1, 1): 1}, 4)
        c = oracle.contact(f_branch, g_branch)
        assert order_from_contact(self.cd, 4, c) == order_of(branch_to_poly(g_branch), f_branch)

    def test_lattice_membership_below_first_exponent(self):
        # n c = (2,0) lies in M_1 = (4Z)^2 + (3,2)Z but below m_1 = (3,2)
        fb = BranchSeries.from_dict({(3, 2): -3}, 4)
        gb = BranchSeries.from_dict({(1, 0): Fraction(1, 2)}, 2)
        cd = oracle.branch_chardata(fb)
        c = oracle.contact(fb, gb)
        truth = order_of(branch_to_poly(gb), fb)
        assert truth == V((4, 0))
        assert order_from_contact(cd, 2, c) == truth
        assert order_from_contact(cd, 2, c, rule="lattice") == V((Fraction(11, 2), 3))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 10 ** 6), st.sampled_from([(4, 2), (8, 2), (6, 3), (4, 4), (8, 4)]))
    def test_random_contacts(self, seed, degrees):
        rng = random.Random(seed)
        n, m = degrees
        fb = oracle.random_branch(rng, n, 2, max_terms=3)
        gb = oracle.random_branch(rng, m, 2, max_terms=2)
        g = branch_to_poly(gb)
        # the formula assumes f.g quasi-ordinary
        if not _cross_differences_quasi_ordinary(fb, gb):
            return
        c = oracle.contact(fb, gb)
        assert order_from_contact(oracle.branch_chardata(fb), m, c) == order_of(g, fb)


class TestNewtonPuiseux:
    def test_cusp(self):
        assert newton_puiseux_irreducible_e1(poly("y^2 - x1^3", 1))

    def test_two_lines(self):
        assert not newton_puiseux_irreducible_e1(poly("y^2 - 3*x1*y + 2*x1^2", 1))

    def test_two_stage_branch(self):
        # exponents 3/2 then 7/4
        f = branch_to_poly(BranchSeries.from_dict({(6,): 1, (7,): 1}, 4))
        assert f == poly("y^4 - 2*x1^3*y^2 - 4*x1^5*y + x1^6 - x1^7", 1)
        assert newton_puiseux_irreducible_e1(f)

    def test_square_minus_higher_term_splits(self):
        # (y^2 - x^3)^2 - x^7 = (y^2 - x^3 - x^(7/2))(y^2 - x^3 + x^(7/2))
        assert not newton_puiseux_irreducible_e1(poly("y^4 - 2*x1^3*y^2 + x1^6 - x1^7", 1))

    def test_repeated_factor(self):
        assert not newton_puiseux_irreducible_e1(poly("y^4 - 2*x1^3*y^2 + x1^6", 1))

    def test_not_distinguished(self):
        with pytest.raises(ContractError):
            newton_puiseux_irreducible_e1(poly("y^2 - 1 - x1", 1))

    def test_needs_one_variable(self, irr_octic):
        with pytest.raises(ContractError):
            newton_puiseux_irreducible_e1(irr_octic)

    def test_against_sympy_factorisation_of_polynomials(self):
        # irreducible over Q[x, y] and singular at 0 is not enough in general, but a
        # product of two distinguished factors is always reducible
        f = poly("y^2 - x1^3", 1) * poly("y^3 - x1^2", 1)
        assert not newton_puiseux_irreducible_e1(f)


class TestBranchQuasiOrdinary:
    def test_characteristic_exponents(self):
        b = binomial_branch(8, (2, 2), (4, 0), Fraction(1, 4), 30)
        assert oracle.characteristic_exponents(b) == [V((2, 2)), V((6, 2))]

    def test_not_quasi_ordinary(self):
        # the difference of conjugates has incomparable leading terms
        b = BranchSeries.from_dict({(1, 0): 1, (0, 1): 1}, 2)
        assert not oracle.is_quasi_ordinary_branch(b)


class TestBranchSpec:
    def test_roundtrip(self):
        b = binomial_branch(8, (2, 2), (4, 0), Fraction(1, 4), 20)
        assert oracle.parse_branch_spec(oracle.format_branch_spec(b)) == b

    def test_override_truncation(self):
        b = oracle.parse_branch_spec("n = 4\n1 6\n1 7\n", truncation=7)
        assert b.truncation == 7 and b.support == [(6,)]

    def test_errors(self):
        with pytest.raises(ContractError):
            oracle.parse_branch_spec("1 6\n")
        with pytest.raises(ContractError):
            oracle.parse_branch_spec("n = 2\nfoo 3\n")
