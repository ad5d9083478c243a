"""Deterministic fixture corpora shared by the acceptance suite."""

import random
from functools import lru_cache

from quasiord import oracle
from quasiord.polyring import MPoly, YPoly

SEED = 20261014


@lru_cache(maxsize=None)
def branch_corpus():
    """Exact branches over n in {2, 4, 6, 8} and e in {1, 2}, several with h >= 2."""
    rng = random.Random(SEED)
    out = []
    depths = {2: (1, 1, 1), 4: (1, 2, 2), 6: (1, 2, 2), 8: (1, 2, 3)}
    for n, hs in depths.items():
        for e in (1, 2):
            for min_h in hs:
                out.append(oracle.random_branch(rng, n, e, max_terms=4, min_h=min_h))
    return tuple(out)


@lru_cache(maxsize=None)
def irreducible_e1(count=30, seed=SEED + 1):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.choice([2, 3, 4, 5, 6, 8])
        b = oracle.random_branch(rng, n, 1, max_terms=3, max_step=3)
        out.append(oracle.branch_to_poly(b))
    return tuple(out)


def random_distinguished_e1(rng, n):
    """Monic ``y^n + ...`` with every coefficient vanishing at ``x = 0``."""
    coeffs = []
    for _ in range(n):
        terms = {}
        for _ in range(rng.randint(0, 2)):
            terms[(rng.randint(1, 2 * n),)] = rng.choice([-2, -1, 1, 2])
        coeffs.append(MPoly(terms, 1))
    if not coeffs[0]:
        coeffs[0] = MPoly({(rng.randint(1, 2 * n),): 1}, 1)
    return YPoly(coeffs + [MPoly.constant(1, 1)], 1)


@lru_cache(maxsize=None)
def plane_curve_corpus():
    """Mixed irreducible / reducible plane-curve polynomials of degree <= 8."""
    rng = random.Random(SEED + 2)
    irr = list(irreducible_e1())
    out = list(irr[:20])
    while len(out) < 35:
        a, b = rng.sample(irr, 2)
        if a.degree + b.degree <= 8:
            out.append(a * b)
    while len(out) < 60:
        out.append(random_distinguished_e1(rng, rng.choice([2, 3, 4, 6])))
    return tuple(out)


@lru_cache(maxsize=None)
def product_pairs(count=20):
    """Pairs of oracle-built irreducible polynomials with total degree <= 12."""
    rng = random.Random(SEED + 3)
    out = []
    while len(out) < count:
        e = rng.choice([1, 2])
        n1, n2 = rng.choice([(2, 2), (2, 4), (4, 2), (3, 3), (4, 4), (2, 6), (6, 4), (8, 2), (4, 8)])
        b1 = oracle.random_branch(rng, n1, e, max_terms=3)
        b2 = oracle.random_branch(rng, n2, e, max_terms=3)
        out.append((oracle.branch_to_poly(b1), oracle.branch_to_poly(b2)))
    return tuple(out)
